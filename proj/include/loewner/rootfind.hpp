#pragma once
// Scalar root finding for the switch-structure quantities of the bounded-driver
// value-range problem: the top-of-range level Y0, the maximal follow offset p0,
// the driver-cap violation window [p1, p2], and the parametric normalization C0.

#include <functional>
#include <optional>

namespace loewner {

// Bisection on [lo, hi]; requires a sign change (or an exact zero at an endpoint).
// Robustness over speed: the callers' functions are cheap and the brackets tight.
double bracket_root(const std::function<double(double)>& f, double lo, double hi,
                    double tol = 1e-12);

// Horizon/bound pair for the capped-driver problem. The regime split decides which
// constraint cuts the shared bottom arc: for c^2 >= T - (1 - e^-4)/4 the initial
// driver bound binds (follow offset reaches c); below it the terminal bound binds.
struct RegimeParams {
    RegimeParams(double T, double c);
    double T;
    double c;
    double threshold() const;            // T - (1 - e^-4)/4
    bool start_bound_binds() const;      // c^2 >= threshold()
};

// Top level of the shared bottom arc, in (sqrt(1-4T), 1). Both regimes agree at the
// threshold where Y0 = e^-2.
double solve_Y0(const RegimeParams& rp);

// Largest admissible follow offset: the bang phase alone exhausts the horizon.
// Root of p^2 - c^2/p^2 - c^2 + 1 = 4T, evaluated in closed form (cancellation-free).
double solve_p0(const RegimeParams& rp);

struct SwitchRoots {
    double p0;
    std::optional<double> p1;   // present if at least one root; p1 < p2 when both exist
    std::optional<double> p2;
};

// Roots in (c, p0) of the terminal-cap equation
//   -4pc + (c^2/p^2) e^{-4c/p} - p^2 = 1 - 4T - c^2.
// Grid scan (1e5 points) with a 10x refinement pass around each sign change, then
// bisection; more than two crossings is an error (contradicts the case dichotomy).
SwitchRoots solve_switch_roots(const RegimeParams& rp, double p0);

// Normalization constant of the parametric form of the unrestricted boundary:
// unique positive root of 2cos^2(phi) log C + C^2 (1-4T) = 2cos^2(phi) log(1-sin phi)
// + (1-sin phi)^2. Valid for 0 < T <= 1/4 (the quarter horizon degenerates to a
// pure-log equation but keeps a unique root).
double solve_C0(double phi, double T);

}  // namespace loewner
