#pragma once
// Phase dynamics of the chordal Loewner flow tracked at a single interior point,
// its Pontryagin adjoint system, and the extremal driver schedules.
//
// The tracked point starts at i; its image under the mapped-out flow is
// z(t) = x(t) + i y(t) with
//   x' =  2 (x - lambda) / ((x - lambda)^2 + y^2),   x(0) = 0,
//   y' = -2 y           / ((x - lambda)^2 + y^2),    y(0) = 1,
// for a measurable driver lambda(t). Endpoints over all |lambda| <= c sweep the
// value range whose boundary the rest of the library assembles.

#include <cstdint>
#include <vector>

#include "loewner/ode.hpp"

namespace loewner {

constexpr double kMaxHorizon = 0.25;   // value range is bounded only below this
constexpr double kYFloor = 1e-12;      // trajectories must stay above the real line

struct PhaseState {
    double x = 0.0;
    double y = 1.0;
    double t = 0.0;
};

struct AdjointState {
    double psi1 = 0.0;
    double psi2 = 0.0;
};

struct Horizon {
    explicit Horizon(double T);
    double T;
};

// Driver schedule: a finite sequence of segments, each either a constant level a
// (|a| <= bound) or a "follow" segment lambda(t) = x(t) - p that rides at constant
// horizontal offset p from the tracked point.
struct DriverSegment {
    enum class Kind { Constant, Follow };
    Kind kind;
    double value;      // level a for Constant, offset p for Follow
    double end_time;   // segment covers (previous end, end_time]
};

struct DrivingFunction {
    std::vector<DriverSegment> segments;
    double bound = 0.0;
    void validate(double horizon_T) const;   // throws std::invalid_argument
};

struct TrajectorySample {
    double t;
    double x;
    double y;
    double lambda;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    PhaseState end;
};

// Adaptive integration of the phase system under the given schedule. Constant
// segments run the planar ODE; follow segments reduce to the scalar equation
// y' = -2y/(p^2 + y^2) with x recovered exactly from dx = -p dy / y.
PhaseState integrate_phase(const DrivingFunction& driver, const Horizon& horizon, double tol);
Trajectory integrate_phase_trajectory(const DrivingFunction& driver, const Horizon& horizon,
                                      double tol);

// Closed-form endpoint under a constant driver, from the conserved quantities
// (x - a) y and (x - a)^2 - y^2 - 4t. Cancellation-free for every sign of the
// discriminant shift. Throws when the tracked point would be swallowed (only
// possible when x == a, e.g. a = 0 with t >= 1/4).
PhaseState constant_driver_step(const PhaseState& from, double a, double dt);
PhaseState constant_driver_endpoint(double a, double t);

// Control Hamiltonian of the endpoint problem and its maximizing driver value
//   lambda0 = x - y psi1 / (sqrt(psi1^2 + psi2^2) - psi2).
double hamiltonian(const PhaseState& s, const AdjointState& adj, double lambda);
double lambda_star(const PhaseState& s, const AdjointState& adj);

struct ExtremalSample {
    double t;
    PhaseState state;
    AdjointState adjoint;
    double lambda0;   // maximizing driver value at this instant
    double h;         // Hamiltonian value at lambda0
    double offset;    // x - lambda0; constant along extremals
};

// Integrates the coupled phase + adjoint system with lambda = lambda0 substituted,
// from (0, 1) and the given covector. Along the exact flow the offset, psi1 and h
// are first integrals; drift measures integration quality.
std::vector<ExtremalSample> integrate_full_hamiltonian(const AdjointState& adj0,
                                                       const Horizon& horizon, double tol);

struct ConservedDrift {
    double product;   // max |(x-a) y - (x0-a) y0|
    double balance;   // max |((x-a)^2 - y^2 - 4t) - ((x0-a)^2 - y0^2 - 4t0)|
};
ConservedDrift conserved_drift(const Trajectory& traj, double a);

// Extremal schedule for follow offset p in [c, p0]: constant -c until
// t1 = (p^2 - c^2/p^2 - c^2 + 1)/4, then follow at offset p; if the follow arc
// reaches the upper cap lambda = c before the horizon (detected by bisection on the
// closed-form arc), a constant +c tail is appended from that switch time t2.
DrivingFunction extremal_schedule(double p, double c, const Horizon& horizon);

// Pure follow schedule over the whole horizon (used for the shared bottom arc,
// where 0 <= p <= c keeps the driver inside the cap on its own).
DrivingFunction follow_driver(double p, const Horizon& horizon);

// Closed form of a follow arc: time to shrink y_from to y_to at offset p, and its
// inverse (bisection; the relation is strictly monotone).
double follow_elapsed(double p, double y_from, double y_to);
double follow_y_after(double p, double y_from, double dt);

}  // namespace loewner
