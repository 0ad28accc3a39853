#include "loewner/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "loewner/ode.hpp"
#include "loewner/rootfind.hpp"

namespace loewner {

namespace {

// splitmix64 finalizer. Per-sample streams run it twice over (seed, index) so
// neighbouring indices start in unrelated regions of the sequence; seeding
// consecutive streams at seed + index * gamma would make them overlap shifted
// copies of each other.
std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next()
    {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

SplitMix sample_stream(std::uint64_t seed, std::uint64_t index)
{
    return SplitMix{mix64(seed ^ mix64(index))};
}

Vec2 driver_endpoint(const DrivingFunction& driver)
{
    PhaseState st;
    double t_prev = 0.0;
    for (const DriverSegment& seg : driver.segments) {
        st = constant_driver_step(st, seg.value, seg.end_time - t_prev);
        t_prev = seg.end_time;
    }
    return {st.x, st.y};
}

}  // namespace

DrivingFunction sample_driver(const DriverSampler& s, std::uint64_t seed,
                              std::uint64_t index)
{
    if (!(s.c > 0.0)) throw std::invalid_argument("sample_driver: bound must be positive");
    if (s.n_switches < 1) throw std::invalid_argument("sample_driver: need at least one segment");
    Horizon horizon(s.T);
    SplitMix rng = sample_stream(seed, index);

    // switch times first, then levels, so the stream layout is stable
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(s.n_switches) - 1);
    for (int k = 0; k + 1 < s.n_switches; ++k) times.push_back(rng.uniform01() * s.T);
    std::sort(times.begin(), times.end());

    DrivingFunction driver;
    driver.bound = s.c;
    double prev = 0.0;
    for (double t : times) {
        if (t <= prev + 1e-13 || t >= s.T - 1e-13) continue;   // degenerate segment
        double level = (2.0 * rng.uniform01() - 1.0) * s.c;
        driver.segments.push_back({DriverSegment::Kind::Constant, level, t});
        prev = t;
    }
    double level = (2.0 * rng.uniform01() - 1.0) * s.c;
    driver.segments.push_back({DriverSegment::Kind::Constant, level, s.T});
    driver.validate(horizon.T);
    return driver;
}

std::vector<Vec2> sample_reachable(const DriverSampler& s, int n, std::uint64_t seed)
{
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int j = 0; j < n; ++j)
        pts.push_back(driver_endpoint(sample_driver(s, seed, static_cast<std::uint64_t>(j))));
    return pts;
}

std::vector<Vec2> sample_reachable_pool(double T, double c, int n, std::uint64_t seed)
{
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int j = 0; j < n; ++j) {
        DriverSampler s{c, 1 + (j & 3), T};
        pts.push_back(driver_endpoint(sample_driver(s, seed, static_cast<std::uint64_t>(j))));
    }
    return pts;
}

Containment point_in_boundary(const std::vector<Vec2>& polygon, Vec2 pt, double band)
{
    if (polygon.size() < 3) throw std::invalid_argument("point_in_boundary: degenerate polygon");
    if (distance_to_polyline(polygon, pt, /*closed=*/true) <= band)
        return Containment::OnBoundary;

    // even-odd ray cast; safe because pt is at least `band` away from every edge
    bool inside = false;
    std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = polygon[i];
        const Vec2& b = polygon[j];
        if ((a.y > pt.y) != (b.y > pt.y)) {
            double x_cross = a.x + (b.x - a.x) * (pt.y - a.y) / (b.y - a.y);
            if (pt.x < x_cross) inside = !inside;
        }
    }
    return inside ? Containment::Inside : Containment::Outside;
}

SampleReport classify_samples(const std::vector<Vec2>& polygon,
                              const std::vector<Vec2>& pts, double band,
                              std::uint64_t seed)
{
    SampleReport rep;
    rep.n_samples = static_cast<int>(pts.size());
    rep.seed = seed;
    for (const Vec2& q : pts) {
        switch (point_in_boundary(polygon, q, band)) {
            case Containment::Inside: ++rep.n_inside; break;
            case Containment::OnBoundary: ++rep.n_on_boundary; break;
            case Containment::Outside:
                ++rep.n_outside;
                rep.max_violation =
                    std::max(rep.max_violation, distance_to_polyline(polygon, q, true));
                break;
        }
    }
    return rep;
}

SampleReport containment_audit(double T, double c, int n, std::uint64_t seed, double band)
{
    ValueRangeBoundary b = assemble_boundary(T, c, 256);
    std::vector<Vec2> pts = sample_reachable_pool(T, c, n, seed);
    return classify_samples(b.polygon, pts, band, seed);
}

double extremal_sharpness(double T, double c, int m, double tol)
{
    if (m < 1) throw std::invalid_argument("extremal_sharpness: need m >= 1");
    Horizon horizon(T);
    ValueRangeBoundary b = assemble_boundary(T, c, 48);

    double worst = 0.0;
    auto record = [&](Vec2 num, double Xcf, double Ycf) {
        worst = std::max(worst, std::hypot(num.x - Xcf, num.y - Ycf));
    };
    auto run_schedule = [&](double p) -> Vec2 {
        PhaseState end = integrate_phase(extremal_schedule(p, c, horizon), horizon, tol);
        return {end.x, end.y};
    };
    auto closed_form = [&](double p) -> BoundaryPoint {
        if (b.case_tag == 1 && p > *b.p1 && p < *b.p2) return l7_point(T, c, p);
        return l3_point(T, c, p);
    };

    double ylo = std::sqrt(1.0 - 4.0 * T);
    for (int i = 1; i <= m; ++i) {
        double s = static_cast<double>(i) / (m + 1);

        // bottom arc: pure follow at offset p = X / (-log Y)
        double Y = ylo + (b.Y0 - ylo) * s;
        double X = std::sqrt(std::max(0.0, std::log(Y) * (1.0 - 4.0 * T - Y * Y) / 2.0));
        double p_follow = X / (-std::log(Y));
        PhaseState end = integrate_phase(follow_driver(p_follow, horizon), horizon, tol);
        record({end.x, end.y}, X, Y);

        // bang/follow arcs across the whole offset range
        double p = c + (b.p0 - c) * s;
        BoundaryPoint cf = closed_form(p);
        record(run_schedule(p), cf.X, cf.Y);

        // capped arc, sampled directly inside the violation window
        if (b.case_tag == 1) {
            double pw = *b.p1 + (*b.p2 - *b.p1) * s;
            BoundaryPoint cfw = l7_point(T, c, pw);
            record(run_schedule(pw), cfw.X, cfw.Y);
        }

        // top arc against the two-slit mixture flow
        BoundaryPoint top = l2_point(T, c, s);
        record(integrate_two_pole(T, c, s, tol), top.X, top.Y);
    }
    return worst;
}

double pontryagin_spot_check(double T, double c, double p, double tol)
{
    Horizon horizon(T);
    if (!(c > 0.0)) throw std::invalid_argument("pontryagin_spot_check: bound must be positive");
    RegimeParams rp(T, c);
    double p0 = solve_p0(rp);
    if (!(p > c) || p > p0 + 1e-9)
        throw std::invalid_argument("pontryagin_spot_check: offset must lie in (c, p0]");

    DrivingFunction sched = extremal_schedule(p, c, horizon);

    // state and covector at the bang/follow switch, normalised so the
    // Hamiltonian equals 1 there: psi = (p, (p^2 - y1^2) / (2 y1))
    double t1 = std::min((p * p - (c * c) / (p * p) - c * c + 1.0) / 4.0, horizon.T);
    double y1 = c / p;
    double x1 = p - c;
    double psi2_1 = (p * p - y1 * y1) / (2.0 * y1);

    struct Sample4 {
        double t, x, y, psi1, psi2, lam;
    };
    std::vector<Sample4> samples;

    auto rhs_at = [](const StateVec<4>& s, double lam) {
        double u = s[0] - lam;
        double y = s[1];
        double D = u * u + y * y;
        double D2 = D * D;
        StateVec<4> d;
        d[0] = 2.0 * u / D;
        d[1] = -2.0 * y / D;
        d[2] = (2.0 / D2) * ((u * u - y * y) * s[2] - 2.0 * u * y * s[3]);
        d[3] = (2.0 / D2) * (2.0 * u * y * s[2] + (u * u - y * y) * s[3]);
        return d;
    };
    OdeOptions opts;
    opts.tol = tol;
    opts.guard_message = "pontryagin_spot_check: trajectory reached the real axis";
    auto guard = [](const StateVec<4>& s) { return s[1] >= kYFloor; };

    // backward leg: run the bang segment in reversed time back to t = 0 and
    // demand it lands on the initial point (0, 1)
    StateVec<4> s4{x1, y1, p, psi2_1};
    if (t1 > 0.0) {
        s4 = integrate_dopri5<4>(
            [&](double, const StateVec<4>& s, StateVec<4>& d) {
                d = rhs_at(s, -c);
                for (double& v : d) v = -v;
            },
            s4, 0.0, t1, opts,
            [&](double sigma, const StateVec<4>& s) {
                samples.push_back({t1 - sigma, s[0], s[1], s[2], s[3], -c});
            },
            guard);
    } else {
        samples.push_back({0.0, x1, y1, p, psi2_1, -c});
    }
    if (std::abs(s4[0]) > 1e-6 || std::abs(s4[1] - 1.0) > 1e-6)
        throw std::runtime_error("pontryagin_spot_check: backward leg missed the start point");

    // forward legs: continue state + covector through the rest of the schedule
    StateVec<4> f4{x1, y1, p, psi2_1};
    double t_prev = t1;
    for (std::size_t k = 1; k < sched.segments.size(); ++k) {
        const DriverSegment& seg = sched.segments[k];
        bool follows = seg.kind == DriverSegment::Kind::Follow;
        double value = seg.value;
        if (seg.end_time > t_prev + 1e-15) {
            f4 = integrate_dopri5<4>(
                [&](double, const StateVec<4>& s, StateVec<4>& d) {
                    d = rhs_at(s, follows ? s[0] - value : value);
                },
                f4, t_prev, seg.end_time, opts,
                [&](double t, const StateVec<4>& s) {
                    samples.push_back({t, s[0], s[1], s[2], s[3],
                                       follows ? s[0] - value : value});
                },
                guard);
        }
        t_prev = seg.end_time;
    }

    // worst maximality defect H(lambda(t)) - max over the admissible candidates
    double worst = std::numeric_limits<double>::infinity();
    for (const Sample4& smp : samples) {
        PhaseState st{smp.x, smp.y, smp.t};
        AdjointState adj{smp.psi1, smp.psi2};
        double best = std::max(hamiltonian(st, adj, -c), hamiltonian(st, adj, c));
        double l0 = lambda_star(st, adj);
        if (l0 >= -c && l0 <= c) best = std::max(best, hamiltonian(st, adj, l0));
        worst = std::min(worst, hamiltonian(st, adj, smp.lam) - best);
    }
    return worst;
}

Vec2 integrate_two_pole(double T, double c, double mu, double tol)
{
    Horizon horizon(T);
    if (!(c > 0.0)) throw std::invalid_argument("integrate_two_pole: bound must be positive");
    if (!(mu >= 0.0 && mu <= 1.0))
        throw std::invalid_argument("integrate_two_pole: weight must lie in [0, 1]");
    double b = c * (2.0 * mu - 1.0);

    OdeOptions opts;
    opts.tol = tol;
    opts.guard_message = "integrate_two_pole: trajectory reached the real axis";
    StateVec<2> z{0.0, 1.0};
    z = integrate_dopri5<2>(
        [&](double, const StateVec<2>& s, StateVec<2>& d) {
            std::complex<double> zz(s[0], s[1]);
            std::complex<double> w = 2.0 * (zz + b) / (zz * zz - c * c);
            d[0] = w.real();
            d[1] = w.imag();
        },
        z, 0.0, horizon.T, opts, detail::NullObserver{},
        [](const StateVec<2>& s) { return s[1] >= kYFloor; });
    return {z[0], z[1]};
}

double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b)
{
    if (a.size() < 3 || b.size() < 3)
        throw std::invalid_argument("hausdorff_distance: degenerate polygon");
    double worst = 0.0;
    for (const Vec2& q : a) worst = std::max(worst, distance_to_polyline(b, q, true));
    for (const Vec2& q : b) worst = std::max(worst, distance_to_polyline(a, q, true));
    return worst;
}

double boundary_coverage_radius(const std::vector<Vec2>& polygon,
                                const std::vector<Vec2>& pts)
{
    if (pts.empty() || polygon.empty())
        return std::numeric_limits<double>::infinity();
    double worst_sq = 0.0;
    for (const Vec2& v : polygon) {
        double best_sq = std::numeric_limits<double>::infinity();
        for (const Vec2& q : pts) {
            double dx = v.x - q.x;
            double dy = v.y - q.y;
            best_sq = std::min(best_sq, dx * dx + dy * dy);
        }
        worst_sq = std::max(worst_sq, best_sq);
    }
    return std::sqrt(worst_sq);
}

}  // namespace loewner
