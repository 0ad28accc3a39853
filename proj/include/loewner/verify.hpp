#pragma once
// Audits of a computed value-range boundary: random reachable samples must land
// inside, extremal endpoints must land on the rim, and a Pontryagin defect check
// confirms local optimality of the bang/follow schedules.

#include <cstdint>
#include <string>
#include <vector>

#include "loewner/boundary.hpp"
#include "loewner/dynamics.hpp"

namespace loewner {

// Deterministic generator for admissible drivers: piecewise-constant schedules
// with values in [-c, c] and uniformly drawn switch times.
struct DriverSampler {
    double c;
    int n_switches;   // number of constant segments is n_switches
    double T;
};

DrivingFunction sample_driver(const DriverSampler& s, std::uint64_t seed,
                              std::uint64_t index);

// Endpoints of the tracked point for `n` sampled drivers. Constant segments are
// chained through the closed-form step, so no ODE tolerance enters.
std::vector<Vec2> sample_reachable(const DriverSampler& s, int n,
                                   std::uint64_t seed);

// Mixed pool: sample j uses 1 + (j % 4) constant segments, so every prefix of
// the pool already carries all four segment-count classes.
std::vector<Vec2> sample_reachable_pool(double T, double c, int n,
                                        std::uint64_t seed);

enum class Containment { Inside, OnBoundary, Outside };

// Even-odd ray test with a distance band: points within `band` of the polygon
// outline count as OnBoundary regardless of the parity result.
Containment point_in_boundary(const std::vector<Vec2>& polygon, Vec2 pt,
                              double band);

struct SampleReport {
    int n_samples = 0;
    int n_inside = 0;
    int n_on_boundary = 0;
    int n_outside = 0;
    double max_violation = 0.0;   // largest outside distance to the outline
    std::uint64_t seed = 0;
};

// Samples drivers with 1..4 switches and classifies their endpoints against the
// assembled boundary polygon.
SampleReport containment_audit(double T, double c, int n, std::uint64_t seed,
                               double band = 1e-3);

SampleReport classify_samples(const std::vector<Vec2>& polygon,
                              const std::vector<Vec2>& pts, double band,
                              std::uint64_t seed);

// Max distance from m extremal-schedule endpoints (re-integrated numerically)
// to the assembled outline. Small values mean the rim is actually attained.
double extremal_sharpness(double T, double c, int m, double tol = 1e-10);

// Hamiltonian defect of the bang/follow schedule indexed by p: reconstructs the
// adjoint at the switch time, integrates state+adjoint backwards under the
// schedule's driver, and returns the worst (most negative) maximality defect
// H(lambda(t)) - max_{|l|<=c} H(l) over a time grid. Near zero means extremal.
double pontryagin_spot_check(double T, double c, double p, double tol = 1e-11);

// Endpoint of the two-pole driver mixture ODE used to cross-check the top arc.
Vec2 integrate_two_pole(double T, double c, double mu, double tol = 1e-10);

// Symmetric Hausdorff distance between two closed polygons (vertex-to-outline).
double hausdorff_distance(const std::vector<Vec2>& a,
                          const std::vector<Vec2>& b);

// Max over boundary vertices of the distance to the nearest of `pts`; gauges
// how completely random-driver endpoints press against the rim.
double boundary_coverage_radius(const std::vector<Vec2>& polygon,
                                const std::vector<Vec2>& pts);

}  // namespace loewner
