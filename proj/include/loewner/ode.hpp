#pragma once
// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) for small smooth systems.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace loewner {

template <std::size_t N>
using StateVec = std::array<double, N>;

struct OdeOptions {
    // Error budget for the whole span, absolute and relative. Each step is allowed
    // the fraction of it matching the fraction of the span it covers, so endpoint
    // accuracy tracks tol instead of drifting with the step count.
    double tol = 1e-10;
    std::size_t max_steps = 4000000;
    const char* guard_message = "state guard rejected the trajectory";
};

namespace detail {
struct NullObserver {
    template <std::size_t N>
    void operator()(double, const StateVec<N>&) const {}
};
struct NullGuard {
    template <std::size_t N>
    bool operator()(const StateVec<N>&) const { return true; }
};
}  // namespace detail

// Integrates y' = rhs(t, y) from t0 to t1 >= t0. observe(t, y) fires at t0 and after
// each accepted step; guard(y) vetoes proposed states (the step is retried smaller).
template <std::size_t N, class Rhs, class Observer = detail::NullObserver,
          class Guard = detail::NullGuard>
StateVec<N> integrate_dopri5(Rhs&& rhs, StateVec<N> y, double t0, double t1,
                             const OdeOptions& opts = {}, Observer&& observe = Observer{},
                             Guard&& guard = Guard{})
{
    static_assert(N >= 1);
    if (!(t1 >= t0)) throw std::invalid_argument("integrate_dopri5: backward span");
    observe(t0, y);
    const double span = t1 - t0;
    if (span <= 0.0) return y;

    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // difference between the 5th and the embedded 4th order weights
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double tol = opts.tol;
    double t = t0;
    double h = span * 1e-2;
    StateVec<N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;

    std::size_t steps = 0, stuck = 0;
    while (t < t1) {
        if (++steps > opts.max_steps)
            throw std::runtime_error("integrate_dopri5: step budget exhausted");
        if (h > t1 - t) h = t1 - t;
        if (!(h > 0) || t + h == t)
            throw std::runtime_error("integrate_dopri5: step size underflow");

        rhs(t, y, k1);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] +
                      h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] +
                      h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        const double budget = tol * (h / span);   // this step's share of the error budget
        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = budget + budget * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / N);

        bool ok = err <= 1.0 && guard(ynew);
        // with the budget proportional to h the controlled quantity scales like h^4,
        // so the optimal retune exponent is -1/4
        if (ok) {
            t += h;
            y = ynew;
            observe(t, y);
            stuck = 0;
            const double grow = err > 0 ? 0.9 * std::pow(err, -0.25) : 5.0;
            h *= std::min(5.0, std::max(0.2, grow));
        } else {
            if (!guard(ynew)) {
                if (++stuck > 120) throw std::runtime_error(opts.guard_message);
                h *= 0.5;
            } else {
                h *= std::max(0.2, 0.9 * std::pow(err, -0.25));
            }
        }
    }
    return y;
}

}  // namespace loewner
