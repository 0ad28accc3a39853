#include "loewner/dynamics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "loewner/rootfind.hpp"

namespace loewner {

Horizon::Horizon(double T_) : T(T_)
{
    if (!(T > 0.0) || !(T < kMaxHorizon))
        throw std::invalid_argument(
            "Horizon: T must satisfy 0 < T < 1/4 (the value range is bounded only there)");
}

void DrivingFunction::validate(double horizon_T) const
{
    if (segments.empty()) throw std::invalid_argument("DrivingFunction: no segments");
    if (!(bound >= 0.0)) throw std::invalid_argument("DrivingFunction: negative bound");
    double prev = 0.0;
    for (const DriverSegment& seg : segments) {
        if (!(seg.end_time > prev))
            throw std::invalid_argument("DrivingFunction: segment end times must increase");
        if (seg.kind == DriverSegment::Kind::Constant &&
            std::abs(seg.value) > bound + 1e-12)
            throw std::invalid_argument("DrivingFunction: constant level exceeds the bound");
        prev = seg.end_time;
    }
    if (std::abs(prev - horizon_T) > 1e-12)
        throw std::invalid_argument("DrivingFunction: schedule does not end at the horizon");
}

namespace {

constexpr const char* kSwallowMsg =
    "integrate_phase: trajectory approached the real axis (horizon too close to the "
    "swallow time for this driver)";

// Runs the schedule, invoking sink(t, x, y, lambda) at the start and after every
// accepted step. Returns the endpoint.
PhaseState run_phase(const DrivingFunction& driver, const Horizon& horizon, double tol,
                     const std::function<void(double, double, double, double)>& sink)
{
    driver.validate(horizon.T);
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_phase: tolerance must be positive");

    OdeOptions opts;
    opts.tol = tol;
    opts.guard_message = kSwallowMsg;

    double x = 0.0, y = 1.0, t = 0.0;
    bool first = true;
    for (const DriverSegment& seg : driver.segments) {
        const double t_end = seg.end_time;
        if (seg.kind == DriverSegment::Kind::Constant) {
            const double a = seg.value;
            auto rhs = [a](double, const StateVec<2>& s, StateVec<2>& ds) {
                const double d = s[0] - a;
                const double den = d * d + s[1] * s[1];
                ds[0] = 2.0 * d / den;
                ds[1] = -2.0 * s[1] / den;
            };
            auto observe = [&](double tt, const StateVec<2>& s) {
                if (first || tt > t) sink(tt, s[0], s[1], a);
            };
            auto guard = [](const StateVec<2>& s) { return s[1] >= kYFloor; };
            StateVec<2> s = integrate_dopri5<2>(rhs, {x, y}, t, t_end, opts, observe, guard);
            x = s[0];
            y = s[1];
        } else {
            const double p = seg.value;
            const double x0 = x, y0 = y;
            auto rhs = [p](double, const StateVec<1>& s, StateVec<1>& ds) {
                ds[0] = -2.0 * s[0] / (p * p + s[0] * s[0]);
            };
            auto observe = [&](double tt, const StateVec<1>& s) {
                const double xx = x0 - p * std::log(s[0] / y0);
                if (first || tt > t) sink(tt, xx, s[0], xx - p);
            };
            auto guard = [](const StateVec<1>& s) { return s[0] >= kYFloor; };
            StateVec<1> s = integrate_dopri5<1>(rhs, {y}, t, t_end, opts, observe, guard);
            x = x0 - p * std::log(s[0] / y0);
            y = s[0];
        }
        t = t_end;
        first = false;
    }
    return PhaseState{x, y, t};
}

}  // namespace

PhaseState integrate_phase(const DrivingFunction& driver, const Horizon& horizon, double tol)
{
    return run_phase(driver, horizon, tol, [](double, double, double, double) {});
}

Trajectory integrate_phase_trajectory(const DrivingFunction& driver, const Horizon& horizon,
                                      double tol)
{
    Trajectory traj;
    traj.end = run_phase(driver, horizon, tol, [&](double t, double x, double y, double l) {
        traj.samples.push_back(TrajectorySample{t, x, y, l});
    });
    return traj;
}

PhaseState constant_driver_step(const PhaseState& from, double a, double dt)
{
    if (!(dt >= 0.0)) throw std::invalid_argument("constant_driver_step: negative step");
    if (dt == 0.0) return from;
    const double u0 = from.x - a;
    const double k = u0 * from.y;   // conserved (x - a) y
    if (u0 == 0.0) {
        const double ysq = from.y * from.y - 4.0 * dt;
        if (ysq <= kYFloor * kYFloor)
            throw std::runtime_error(
                "constant_driver_step: tracked point directly above the driver is swallowed");
        return PhaseState{from.x, std::sqrt(ysq), from.t + dt};
    }
    // (x-a)^2 - y^2 - 4t conserved: u^2 - (k/u)^2 = m with m below, hence
    // u^2 = (m + sqrt(m^2 + 4k^2))/2; conjugate form avoids cancellation for m < 0.
    const double m = u0 * u0 - from.y * from.y + 4.0 * dt;
    const double disc = std::hypot(m, 2.0 * k);
    const double usq = m >= 0.0 ? 0.5 * (m + disc) : 2.0 * k * k / (disc - m);
    const double u = std::copysign(std::sqrt(usq), u0);   // (x-a)y never changes sign
    return PhaseState{a + u, k / u, from.t + dt};
}

PhaseState constant_driver_endpoint(double a, double t)
{
    return constant_driver_step(PhaseState{0.0, 1.0, 0.0}, a, t);
}

double hamiltonian(const PhaseState& s, const AdjointState& adj, double lambda)
{
    const double d = s.x - lambda;
    const double den = d * d + s.y * s.y;
    if (!(den > 0.0)) throw std::invalid_argument("hamiltonian: degenerate denominator");
    return (2.0 * d * adj.psi1 - 2.0 * s.y * adj.psi2) / den;
}

namespace {

// r - psi2 without cancellation: for psi2 > 0 use psi1^2 / (r + psi2).
double adjoint_gap(const AdjointState& adj)
{
    const double r = std::hypot(adj.psi1, adj.psi2);
    if (!(r > 0.0)) throw std::invalid_argument("adjoint vector vanishes");
    const double gap = adj.psi2 > 0.0 ? adj.psi1 * adj.psi1 / (r + adj.psi2) : r - adj.psi2;
    if (!(gap > 0.0))
        throw std::invalid_argument(
            "maximizing driver undefined: psi1 = 0 with psi2 > 0 leaves no interior maximum");
    return gap;
}

}  // namespace

double lambda_star(const PhaseState& s, const AdjointState& adj)
{
    return s.x - s.y * adj.psi1 / adjoint_gap(adj);
}

std::vector<ExtremalSample> integrate_full_hamiltonian(const AdjointState& adj0,
                                                       const Horizon& horizon, double tol)
{
    adjoint_gap(adj0);   // validates admissibility at t = 0
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_full_hamiltonian: tolerance must be positive");

    // State: (x, y, psi1, psi2) with lambda = lambda0 substituted. The offset
    // x - lambda0 = y psi1 / (r - psi2) is evaluated in the cancellation-free form.
    auto offset_of = [](const StateVec<4>& s) {
        const double r = std::hypot(s[2], s[3]);
        const double gap = s[3] > 0.0 ? s[2] * s[2] / (r + s[3]) : r - s[3];
        return s[1] * s[2] / gap;
    };
    auto rhs = [&](double, const StateVec<4>& s, StateVec<4>& ds) {
        const double d = offset_of(s);
        const double y = s[1];
        const double den = d * d + y * y;
        ds[0] = 2.0 * d / den;
        ds[1] = -2.0 * y / den;
        const double f = 2.0 / (den * den);
        ds[2] = f * ((d * d - y * y) * s[2] - 2.0 * d * y * s[3]);
        ds[3] = f * (2.0 * d * y * s[2] + (d * d - y * y) * s[3]);
    };

    std::vector<ExtremalSample> out;
    auto observe = [&](double t, const StateVec<4>& s) {
        const double d = offset_of(s);
        ExtremalSample smp;
        smp.t = t;
        smp.state = PhaseState{s[0], s[1], t};
        smp.adjoint = AdjointState{s[2], s[3]};
        smp.offset = d;
        smp.lambda0 = s[0] - d;
        smp.h = hamiltonian(smp.state, smp.adjoint, smp.lambda0);
        out.push_back(smp);
    };
    auto guard = [](const StateVec<4>& s) { return s[1] >= kYFloor; };

    OdeOptions opts;
    opts.tol = tol;
    opts.guard_message = kSwallowMsg;
    integrate_dopri5<4>(rhs, {0.0, 1.0, adj0.psi1, adj0.psi2}, 0.0, horizon.T, opts, observe,
                        guard);
    return out;
}

ConservedDrift conserved_drift(const Trajectory& traj, double a)
{
    ConservedDrift drift{0.0, 0.0};
    if (traj.samples.empty()) return drift;
    const TrajectorySample& s0 = traj.samples.front();
    const double u0 = s0.x - a;
    const double prod0 = u0 * s0.y;
    const double bal0 = u0 * u0 - s0.y * s0.y - 4.0 * s0.t;
    for (const TrajectorySample& s : traj.samples) {
        const double u = s.x - a;
        drift.product = std::max(drift.product, std::abs(u * s.y - prod0));
        drift.balance =
            std::max(drift.balance, std::abs(u * u - s.y * s.y - 4.0 * s.t - bal0));
    }
    return drift;
}

double follow_elapsed(double p, double y_from, double y_to)
{
    if (!(y_from > 0.0) || !(y_to > 0.0) || !(y_to <= y_from))
        throw std::invalid_argument("follow_elapsed: need 0 < y_to <= y_from");
    return -(2.0 * p * p * std::log(y_to / y_from) + y_to * y_to - y_from * y_from) / 4.0;
}

double follow_y_after(double p, double y_from, double dt)
{
    if (!(y_from > 0.0)) throw std::invalid_argument("follow_y_after: y_from must be positive");
    if (!(dt >= 0.0)) throw std::invalid_argument("follow_y_after: negative step");
    if (dt == 0.0) return y_from;
    if (p == 0.0) {
        const double ysq = y_from * y_from - 4.0 * dt;
        if (ysq <= kYFloor * kYFloor)
            throw std::runtime_error("follow_y_after: zero-offset arc is swallowed");
        return std::sqrt(ysq);
    }
    auto f = [&](double y) {
        return 2.0 * p * p * std::log(y / y_from) + y * y - y_from * y_from + 4.0 * dt;
    };
    double lo = 0.5 * y_from;
    for (int i = 0; i < 2000 && f(lo) >= 0.0; ++i) lo *= 0.5;
    return bracket_root(f, lo, y_from, 1e-15);
}

DrivingFunction follow_driver(double p, const Horizon& horizon)
{
    DrivingFunction d;
    d.bound = std::abs(p);
    d.segments.push_back(DriverSegment{DriverSegment::Kind::Follow, p, horizon.T});
    return d;
}

DrivingFunction extremal_schedule(double p, double c, const Horizon& horizon)
{
    if (!(c > 0.0)) throw std::invalid_argument("extremal_schedule: bound must be positive");
    if (p < c - 1e-12) throw std::invalid_argument("extremal_schedule: offset below the bound");
    p = std::max(p, c);
    double t1 = (p * p - (c * c) / (p * p) - c * c + 1.0) / 4.0;
    if (t1 > horizon.T + 1e-12)
        throw std::invalid_argument(
            "extremal_schedule: offset beyond the horizon-exhausting value p0");
    t1 = std::min(std::max(t1, 0.0), horizon.T);

    DrivingFunction d;
    d.bound = c;
    if (t1 >= horizon.T) {   // p = p0: the bang phase consumes the whole horizon
        d.segments.push_back(DriverSegment{DriverSegment::Kind::Constant, -c, horizon.T});
        return d;
    }
    if (t1 > 0.0)
        d.segments.push_back(DriverSegment{DriverSegment::Kind::Constant, -c, t1});

    // Bang endpoint in closed form: (x1 + c) y1 = c with x1 = p - c, so y1 = c / p.
    const double x1 = p - c;
    const double y1 = c / p;
    const double yT = follow_y_after(p, y1, horizon.T - t1);
    // The driver rises along the arc as lambda = x - p; it hits +c where
    // x = c + p, i.e. at y_cross = y1 exp((x1 - c - p)/p) = y1 exp(-2c/p).
    auto q = [&](double y) { return x1 - p * std::log(y / y1) - (c + p); };
    if (q(yT) < 0.0) {
        d.segments.push_back(DriverSegment{DriverSegment::Kind::Follow, p, horizon.T});
        return d;
    }
    const double y2 = bracket_root(q, yT, y1, 1e-15);
    const double t2 = t1 + follow_elapsed(p, y1, y2);
    if (t2 >= horizon.T - 1e-15) {   // crossing at the horizon itself: no tail
        d.segments.push_back(DriverSegment{DriverSegment::Kind::Follow, p, horizon.T});
        return d;
    }
    d.segments.push_back(DriverSegment{DriverSegment::Kind::Follow, p, t2});
    d.segments.push_back(DriverSegment{DriverSegment::Kind::Constant, c, horizon.T});
    return d;
}

}  // namespace loewner
