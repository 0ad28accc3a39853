#include "loewner/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "loewner/dynamics.hpp"
#include "loewner/rootfind.hpp"

namespace loewner {

const char* curve_id_name(CurveId id)
{
    switch (id) {
        case CurveId::L1: return "l1";
        case CurveId::L2: return "l2";
        case CurveId::L3: return "l3";
        case CurveId::L4: return "l4";
        case CurveId::L5: return "l5";
        case CurveId::L6: return "l6";
        case CurveId::L7: return "l7";
        case CurveId::L8: return "l8";
        case CurveId::L9: return "l9";
        case CurveId::L10: return "l10";
        case CurveId::Unrestricted: return "unrestricted";
        case CurveId::Thm1: return "thm1";
    }
    return "?";
}

namespace {

double dist2(double ax, double ay, double bx, double by)
{
    const double dx = ax - bx, dy = ay - by;
    return dx * dx + dy * dy;
}

// Smoothstep-eased parameter grid. Clustering samples at both ends keeps chords
// short where a curve leaves an axis crossing with square-root speed.
std::vector<double> graded_params(double lo, double hi, int n)
{
    if (n < 2) throw std::invalid_argument("curve sampling needs at least 2 points");
    std::vector<double> ps(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double s = static_cast<double>(k) / (n - 1);
        ps[static_cast<std::size_t>(k)] = lo + (hi - lo) * (s * s * (3.0 - 2.0 * s));
    }
    ps.front() = lo;
    ps.back() = hi;
    return ps;
}

std::vector<double> uniform_params(double lo, double hi, int n)
{
    if (n < 2) throw std::invalid_argument("curve sampling needs at least 2 points");
    std::vector<double> ps(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        ps[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
    ps.back() = hi;
    return ps;
}

double bbox_diag(const std::vector<BoundaryPoint>& pts)
{
    double xlo = pts[0].X, xhi = pts[0].X, ylo = pts[0].Y, yhi = pts[0].Y;
    for (const BoundaryPoint& p : pts) {
        xlo = std::min(xlo, p.X);
        xhi = std::max(xhi, p.X);
        ylo = std::min(ylo, p.Y);
        yhi = std::max(yhi, p.Y);
    }
    return std::hypot(xhi - xlo, yhi - ylo);
}

// Inserts parameter midpoints until every chord is below 1/64 of the bounding-box
// diagonal of the initial sample set.
std::vector<BoundaryPoint> refine_chords(std::vector<BoundaryPoint> pts,
                                         const std::function<BoundaryPoint(double)>& eval)
{
    const double cap = std::max(bbox_diag(pts) / 64.0, 1e-12);
    constexpr std::size_t kMaxPoints = 1u << 16;
    for (int pass = 0; pass < 24; ++pass) {
        bool inserted = false;
        std::vector<BoundaryPoint> out;
        out.reserve(pts.size() * 2);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            out.push_back(pts[i]);
            const double chord =
                std::sqrt(dist2(pts[i].X, pts[i].Y, pts[i + 1].X, pts[i + 1].Y));
            const double mid = 0.5 * (pts[i].param + pts[i + 1].param);
            if (chord > cap && out.size() + pts.size() < kMaxPoints &&
                mid > std::min(pts[i].param, pts[i + 1].param) &&
                mid < std::max(pts[i].param, pts[i + 1].param)) {
                out.push_back(eval(mid));
                inserted = true;
            }
        }
        out.push_back(pts.back());
        pts = std::move(out);
        if (!inserted) break;
    }
    return pts;
}

double unrestricted_x(double T, double Y)
{
    const double prod = std::log(Y) * (1.0 - 4.0 * T - Y * Y);
    return std::sqrt(std::max(prod, 0.0) / 2.0);
}

void check_horizon(double T)
{
    if (!(T > 0.0) || !(T < kMaxHorizon))
        throw std::invalid_argument("horizon must satisfy 0 < T < 1/4");
}

}  // namespace

BoundaryCurve unrestricted_boundary(double T, int n)
{
    check_horizon(T);
    const double ylo = std::sqrt(1.0 - 4.0 * T);
    auto eval = [T](double Y) { return BoundaryPoint{unrestricted_x(T, Y), Y, Y}; };
    std::vector<BoundaryPoint> pts;
    for (double Y : graded_params(ylo, 1.0, n)) pts.push_back(eval(Y));
    pts.front() = BoundaryPoint{0.0, ylo, ylo};
    pts.back() = BoundaryPoint{0.0, 1.0, 1.0};
    BoundaryCurve curve{CurveId::Unrestricted, false, refine_chords(std::move(pts), eval)};
    return curve;
}

BoundaryPoint theorem1_point(double phi, double T)
{
    const double C0 = solve_C0(phi, T);
    const double A = 1.0 - std::sin(phi);
    const double X = (C0 * C0 * (4.0 * T - 1.0) + A * A) / (2.0 * C0 * std::cos(phi));
    return BoundaryPoint{X, A / C0, phi};
}

BoundaryCurve curve_l1(double T, double c, int n)
{
    RegimeParams rp(T, c);
    if (!rp.start_bound_binds())
        throw std::invalid_argument(
            "curve_l1: requires c^2 >= T - (1 - e^-4)/4 (bound regime of the case theorem)");
    const double ylo = std::sqrt(1.0 - 4.0 * T);
    const double Y0 = solve_Y0(rp);
    auto eval = [T](double Y) { return BoundaryPoint{unrestricted_x(T, Y), Y, Y}; };
    std::vector<BoundaryPoint> pts;
    for (double Y : graded_params(ylo, Y0, n)) pts.push_back(eval(Y));
    pts.front() = BoundaryPoint{0.0, ylo, ylo};
    return BoundaryCurve{CurveId::L1, false, refine_chords(std::move(pts), eval)};
}

BoundaryPoint l3_point(double T, double c, double p)
{
    if (!(c > 0.0) || !(p >= c - 1e-12))
        throw std::invalid_argument("l3_point: need p >= c > 0");
    p = std::max(p, c);
    const double rhs = 1.0 - 4.0 * T - c * c;
    auto G = [&](double Y) {
        return 2.0 * p * p * std::log(Y * p / c) + Y * Y - p * p - rhs;
    };
    // At Y = c/p the residual equals 4(T - t1(p)) >= 0 for p <= p0, so c/p brackets
    // from above; halving brackets from below (G -> -inf as Y -> 0).
    const double hi = c / p;
    if (G(hi) < -1e-9)
        throw std::invalid_argument("l3_point: offset p exceeds the admissible range");
    double lo = 0.5 * hi;
    for (int i = 0; i < 2000 && G(lo) >= 0.0; ++i) lo *= 0.5;
    const double Y = G(hi) <= 0.0 ? hi : bracket_root(G, lo, hi, 1e-15);
    const double X = -c + p * (1.0 - std::log(Y * p / c));
    return BoundaryPoint{X, Y, p};
}

double l3_terminal_driver(double T, double c, double p)
{
    const BoundaryPoint b = l3_point(T, c, p);
    return b.X - p;
}

BoundaryCurve curve_l3(double T, double c, double p_lo, double p_hi, int n, CurveId id)
{
    check_horizon(T);
    if (!(p_lo <= p_hi)) throw std::invalid_argument("curve_l3: empty offset range");
    auto eval = [T, c](double p) { return l3_point(T, c, p); };
    std::vector<BoundaryPoint> pts;
    for (double p : uniform_params(p_lo, p_hi, n)) pts.push_back(eval(p));
    return BoundaryCurve{id, false, refine_chords(std::move(pts), eval)};
}

BoundaryPoint l7_point(double T, double c, double p)
{
    if (!(c > 0.0) || !(p > 0.0)) throw std::invalid_argument("l7_point: need p, c > 0");
    // (X - c) Y = c e^{-2c/p} and (X - c)^2 - Y^2 = c^2 - 1 + 4T - 4cp.
    const double k = c * std::exp(-2.0 * c / p);
    const double m = c * c - 1.0 + 4.0 * T - 4.0 * c * p;
    const double disc = std::hypot(m, 2.0 * k);
    const double usq = m >= 0.0 ? 0.5 * (m + disc) : 2.0 * k * k / (disc - m);
    const double u = std::sqrt(usq);   // X > c on this family
    return BoundaryPoint{c + u, k / u, p};
}

BoundaryCurve curve_l7(double T, double c, double p1, double p2, int n)
{
    check_horizon(T);
    if (!(p1 <= p2)) throw std::invalid_argument("curve_l7: empty offset range");
    auto eval = [T, c](double p) { return l7_point(T, c, p); };
    std::vector<BoundaryPoint> pts;
    for (double p : uniform_params(p1, p2, n)) pts.push_back(eval(p));
    return BoundaryCurve{CurveId::L7, false, refine_chords(std::move(pts), eval)};
}

namespace {

using complexd = std::complex<double>;

struct TopArcEquation {
    double T;
    double c;

    complexd residual(complexd z, double mu) const
    {
        const double b = c * (2.0 * mu - 1.0);
        const double K = 8.0 * mu * c * c * (mu - 1.0);
        complexd v = z * z + 1.0 - 2.0 * b * (z - complexd(0.0, 1.0)) - 4.0 * T;
        if (K != 0.0)
            v += K * (std::log(z + b) - std::log(complexd(b, 1.0)));
        return v;
    }
    complexd derivative(complexd z, double mu) const
    {
        const double b = c * (2.0 * mu - 1.0);
        const double K = 8.0 * mu * c * c * (mu - 1.0);
        complexd v = 2.0 * z - 2.0 * b;
        if (K != 0.0) v += K / (z + b);
        return v;
    }
    complexd anchor() const
    {
        // mu = 0 closed form: (z + c)^2 = 4T + c^2 - 1 + 2ci, upper-half-plane root.
        return -c + std::sqrt(complexd(4.0 * T + c * c - 1.0, 2.0 * c));
    }

    // Damped Newton staying in the upper half-plane. Returns false on failure.
    bool newton(complexd& z, double mu) const
    {
        complexd zz = z;
        for (int it = 0; it < 80; ++it) {
            const complexd F = residual(zz, mu);
            if (std::abs(F) < 1e-13) {
                z = zz;
                return true;
            }
            const complexd dF = derivative(zz, mu);
            if (!(std::abs(dF) > 0.0)) return false;
            complexd step = -F / dF;
            const double cap = 0.5 * std::max(1.0, std::abs(zz));
            if (std::abs(step) > cap) step *= cap / std::abs(step);
            complexd znew = zz + step;
            int halved = 0;
            while (znew.imag() <= 1e-14 && halved < 60) {
                step *= 0.5;
                znew = zz + step;
                ++halved;
            }
            if (znew.imag() <= 1e-14) return false;
            zz = znew;
        }
        z = zz;
        return std::abs(residual(zz, mu)) < 1e-11;
    }

    // Continuation in mu from a known solution, with step bisection on failure.
    complexd continue_to(complexd z_from, double mu_from, double mu_to) const
    {
        double mu = mu_from;
        complexd z = z_from;
        double step = (mu_to - mu_from);
        if (step == 0.0) return z;
        const double dir = step > 0.0 ? 1.0 : -1.0;
        step = std::min(std::abs(step), 1.0 / 64.0) * dir;
        while (dir * (mu_to - mu) > 1e-16) {
            if (dir * (mu + step) > dir * mu_to) step = mu_to - mu;
            complexd trial = z;
            if (newton(trial, mu + step)) {
                mu += step;
                z = trial;
                step *= 1.7;
                if (std::abs(step) > 1.0 / 64.0) step = dir / 64.0;
            } else {
                step *= 0.5;
                if (std::abs(step) < 1e-10)
                    throw std::runtime_error(
                        "top-arc continuation stalled near mu = " + std::to_string(mu));
            }
        }
        return z;
    }
};

}  // namespace

BoundaryPoint l2_point(double T, double c, double mu)
{
    check_horizon(T);
    if (!(c > 0.0)) throw std::invalid_argument("l2_point: bound must be positive");
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("l2_point: mu outside [0, 1]");
    TopArcEquation eq{T, c};
    const complexd z = eq.continue_to(eq.anchor(), 0.0, mu);
    return BoundaryPoint{z.real(), z.imag(), mu};
}

BoundaryCurve curve_l2(double T, double c, int n)
{
    check_horizon(T);
    if (!(c > 0.0)) throw std::invalid_argument("curve_l2: bound must be positive");
    TopArcEquation eq{T, c};
    std::vector<BoundaryPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    complexd z = eq.anchor();
    double mu_prev = 0.0;
    for (double mu : uniform_params(0.0, 1.0, n)) {
        z = eq.continue_to(z, mu_prev, mu);
        mu_prev = mu;
        pts.push_back(BoundaryPoint{z.real(), z.imag(), mu});
    }
    // Chord refinement; midpoints are solved with the neighbor average as seed and
    // fall back to continuation from the left neighbor.
    const double cap = std::max(bbox_diag(pts) / 64.0, 1e-12);
    for (int pass = 0; pass < 24; ++pass) {
        bool inserted = false;
        std::vector<BoundaryPoint> out;
        out.reserve(pts.size() * 2);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            out.push_back(pts[i]);
            const double chord =
                std::sqrt(dist2(pts[i].X, pts[i].Y, pts[i + 1].X, pts[i + 1].Y));
            const double mid = 0.5 * (pts[i].param + pts[i + 1].param);
            if (chord > cap && mid > pts[i].param && mid < pts[i + 1].param &&
                out.size() + pts.size() < (1u << 16)) {
                complexd zm(0.5 * (pts[i].X + pts[i + 1].X), 0.5 * (pts[i].Y + pts[i + 1].Y));
                if (!eq.newton(zm, mid))
                    zm = eq.continue_to(complexd(pts[i].X, pts[i].Y), pts[i].param, mid);
                out.push_back(BoundaryPoint{zm.real(), zm.imag(), mid});
                inserted = true;
            }
        }
        out.push_back(pts.back());
        pts = std::move(out);
        if (!inserted) break;
    }
    return BoundaryCurve{CurveId::L2, false, std::move(pts)};
}

namespace {

CurveId mirror_id(CurveId id)
{
    switch (id) {
        case CurveId::L3: return CurveId::L4;
        case CurveId::L5: return CurveId::L6;
        case CurveId::L7: return CurveId::L8;
        case CurveId::L9: return CurveId::L10;
        default: return id;
    }
}

BoundaryCurve mirror_curve(const BoundaryCurve& c)
{
    BoundaryCurve m{mirror_id(c.id), true, {}};
    m.points.reserve(c.points.size());
    for (auto it = c.points.rbegin(); it != c.points.rend(); ++it)
        m.points.push_back(BoundaryPoint{-it->X, it->Y, it->param});
    return m;
}

}  // namespace

double distance_to_polyline(const std::vector<Vec2>& pts, Vec2 q, bool closed)
{
    if (pts.empty()) return std::numeric_limits<double>::infinity();
    if (pts.size() == 1) return std::hypot(q.x - pts[0].x, q.y - pts[0].y);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = pts.size();
    const std::size_t edges = closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        const double ex = b.x - a.x, ey = b.y - a.y;
        const double len2 = ex * ex + ey * ey;
        double t = 0.0;
        if (len2 > 0.0) t = std::clamp(((q.x - a.x) * ex + (q.y - a.y) * ey) / len2, 0.0, 1.0);
        best = std::min(best, dist2(q.x, q.y, a.x + t * ex, a.y + t * ey));
    }
    return std::sqrt(best);
}

double polygon_signed_area(const std::vector<Vec2>& poly)
{
    double twice = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * twice;
}

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c)
{
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& q)
{
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d)
{
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

bool polygon_is_simple(const std::vector<Vec2>& poly)
{
    const std::size_t n = poly.size();
    if (n < 3) return false;

    double xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
    for (const Vec2& v : poly) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    const int cells = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(n))), 8, 192);
    const double wx = std::max(xhi - xlo, 1e-30) / cells;
    const double wy = std::max(yhi - ylo, 1e-30) / cells;
    auto cell_of = [&](double v, double lo, double w) {
        return std::clamp(static_cast<int>((v - lo) / w), 0, cells - 1);
    };

    std::vector<std::vector<std::uint32_t>> bins(
        static_cast<std::size_t>(cells) * static_cast<std::size_t>(cells));
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const int cx0 = cell_of(std::min(a.x, b.x), xlo, wx);
        const int cx1 = cell_of(std::max(a.x, b.x), xlo, wx);
        const int cy0 = cell_of(std::min(a.y, b.y), ylo, wy);
        const int cy1 = cell_of(std::max(a.y, b.y), ylo, wy);
        for (int cx = cx0; cx <= cx1; ++cx)
            for (int cy = cy0; cy <= cy1; ++cy)
                bins[static_cast<std::size_t>(cx) * cells + cy].push_back(
                    static_cast<std::uint32_t>(i));
    }

    std::unordered_set<std::uint64_t> seen;
    for (const auto& bin : bins) {
        for (std::size_t u = 0; u < bin.size(); ++u) {
            for (std::size_t v = u + 1; v < bin.size(); ++v) {
                std::uint32_t i = bin[u], j = bin[v];
                if (i > j) std::swap(i, j);
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;   // adjacent edges
                const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
                if (!seen.insert(key).second) continue;
                if (segments_touch(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]))
                    return false;
            }
        }
    }
    return true;
}

namespace {

void append_curve(std::vector<Vec2>& polygon, const BoundaryCurve& curve, double& max_gap)
{
    bool first_point = true;
    for (const BoundaryPoint& p : curve.points) {
        if (!polygon.empty()) {
            const double gap =
                std::sqrt(dist2(polygon.back().x, polygon.back().y, p.X, p.Y));
            if (first_point) max_gap = std::max(max_gap, gap);
            if (gap < 1e-9) {
                first_point = false;
                continue;   // shared joint vertex
            }
            if (first_point && gap > 1e-6)
                throw std::runtime_error(std::string("assemble_boundary: stitching gap at ") +
                                         curve_id_name(curve.id) + " exceeds 1e-6");
        }
        polygon.push_back(Vec2{p.X, p.Y});
        first_point = false;
    }
}

}  // namespace

ValueRangeBoundary assemble_boundary(double T, double c, int n_per_curve)
{
    RegimeParams rp(T, c);
    if (!rp.start_bound_binds())
        throw std::invalid_argument(
            "assemble_boundary: requires c^2 >= T - (1 - e^-4)/4; smaller bounds have a "
            "different boundary structure");
    if (n_per_curve < 2) throw std::invalid_argument("assemble_boundary: n_per_curve < 2");

    ValueRangeBoundary out;
    out.Y0 = solve_Y0(rp);
    out.p0 = solve_p0(rp);
    const SwitchRoots roots = solve_switch_roots(rp, out.p0);

    bool violated = false;
    if (roots.p1 && roots.p2) {
        const double pmid = 0.5 * (*roots.p1 + *roots.p2);
        violated = l3_terminal_driver(T, c, pmid) > c;
    }
    if (roots.p1 && !roots.p2) out.single_root = roots.p1;

    const int n = n_per_curve;
    std::vector<BoundaryCurve> right;
    if (violated) {
        out.case_tag = 1;
        out.p1 = roots.p1;
        out.p2 = roots.p2;
        right.push_back(curve_l1(T, c, n));
        right.push_back(curve_l3(T, c, c, *roots.p1, n, CurveId::L5));
        right.push_back(curve_l7(T, c, *roots.p1, *roots.p2, n));
        right.push_back(curve_l3(T, c, *roots.p2, out.p0, n, CurveId::L9));
    } else {
        out.case_tag = 2;
        right.push_back(curve_l1(T, c, n));
        right.push_back(curve_l3(T, c, c, out.p0, n, CurveId::L3));
    }

    out.curves = right;
    out.curves.push_back(curve_l2(T, c, n));
    for (auto it = right.rbegin(); it != right.rend(); ++it)
        out.curves.push_back(mirror_curve(*it));

    out.max_stitch_gap = 0.0;
    for (const BoundaryCurve& curve : out.curves) append_curve(out.polygon, curve, out.max_stitch_gap);
    // closing joint back to the start
    if (out.polygon.size() >= 2) {
        const double gap = std::sqrt(dist2(out.polygon.back().x, out.polygon.back().y,
                                           out.polygon.front().x, out.polygon.front().y));
        out.max_stitch_gap = std::max(out.max_stitch_gap, gap);
        if (gap > 1e-6)
            throw std::runtime_error("assemble_boundary: boundary fails to close (gap > 1e-6)");
        if (gap < 1e-9) out.polygon.pop_back();
    }

    const double ylo = std::sqrt(1.0 - 4.0 * T);
    if (out.polygon.empty() ||
        std::sqrt(dist2(out.polygon.front().x, out.polygon.front().y, 0.0, ylo)) > 1e-9)
        throw std::runtime_error("assemble_boundary: polygon does not start at (0, sqrt(1-4T))");
    if (!(polygon_signed_area(out.polygon) > 0.0))
        throw std::runtime_error("assemble_boundary: polygon is not counterclockwise");
    if (!polygon_is_simple(out.polygon))
        throw std::runtime_error("assemble_boundary: polygon self-intersects");

    // Mirror symmetry. All families except the top arc are reflected copies by
    // construction, so checking the top arc against itself suffices.
    {
        std::vector<Vec2> top;
        for (const BoundaryCurve& curve : out.curves)
            if (curve.id == CurveId::L2)
                for (const BoundaryPoint& p : curve.points) top.push_back(Vec2{p.X, p.Y});
        for (const Vec2& v : top)
            if (distance_to_polyline(top, Vec2{-v.x, v.y}, false) > 1e-6)
                throw std::runtime_error(
                    "assemble_boundary: top arc breaks the mirror symmetry tolerance");
    }
    return out;
}

std::vector<Vec2> unrestricted_polygon(double T, int n)
{
    const BoundaryCurve right = unrestricted_boundary(T, n);
    std::vector<Vec2> poly;
    poly.reserve(right.points.size() * 2);
    for (const BoundaryPoint& p : right.points) poly.push_back(Vec2{p.X, p.Y});
    for (auto it = right.points.rbegin(); it != right.points.rend(); ++it) {
        if (std::abs(it->X) < 1e-15) continue;   // axis points are shared with the right half
        poly.push_back(Vec2{-it->X, it->Y});
    }
    return poly;
}

}  // namespace loewner
