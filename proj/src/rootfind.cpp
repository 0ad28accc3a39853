#include "loewner/rootfind.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace loewner {

double bracket_root(const std::function<double(double)>& f, double lo, double hi,
                    double tol)
{
    if (!(lo <= hi)) throw std::invalid_argument("bracket_root: empty interval");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::invalid_argument("bracket_root: no sign change on [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;   // interval at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

RegimeParams::RegimeParams(double T_, double c_) : T(T_), c(c_)
{
    if (!(T > 0.0) || !(T < 0.25))
        throw std::invalid_argument("RegimeParams: horizon must satisfy 0 < T < 1/4");
    if (!(c > 0.0)) throw std::invalid_argument("RegimeParams: driver bound must be positive");
}

double RegimeParams::threshold() const { return T - (1.0 - std::exp(-4.0)) / 4.0; }

bool RegimeParams::start_bound_binds() const { return c * c >= threshold(); }

double solve_Y0(const RegimeParams& rp)
{
    const double T = rp.T, c = rp.c;
    const double base = 1.0 - 4.0 * T;
    const double yfloor = std::sqrt(base);
    if (rp.start_bound_binds()) {
        // 2c^2 log Y + Y^2 = 1 - 4T, strictly increasing in Y, root in (sqrt(1-4T), 1).
        auto f = [&](double Y) { return 2.0 * c * c * std::log(Y) + Y * Y - base; };
        return bracket_root(f, yfloor + 1e-14, 1.0 - 1e-14);
    }
    // 2c^2 log Y / (1 + log Y)^2 + Y^2 = 1 - 4T on (sqrt(1-4T), e^-2); there log Y < -2,
    // so the denominator stays away from zero. When c^2 sits exactly on the regime
    // threshold the root coincides with e^-2 itself, and rounding can push the endpoint
    // evaluation to the wrong side; pad the right end a hair so the bracket survives.
    auto f = [&](double Y) {
        const double l = std::log(Y);
        const double d = 1.0 + l;
        return 2.0 * c * c * l / (d * d) + Y * Y - base;
    };
    return bracket_root(f, yfloor + 1e-14, std::exp(-2.0) * (1.0 + 1e-9));
}

double solve_p0(const RegimeParams& rp)
{
    const double c = rp.c;
    const double m = 4.0 * rp.T + c * c - 1.0;
    const double disc = std::hypot(m, 2.0 * c);
    // p0^2 = (m + disc)/2; for m < 0 the sum cancels, so use the conjugate form.
    const double p0sq = m >= 0.0 ? 0.5 * (m + disc) : 2.0 * c * c / (disc - m);
    return std::sqrt(p0sq);
}

SwitchRoots solve_switch_roots(const RegimeParams& rp, double p0)
{
    const double c = rp.c;
    const double rhs = 1.0 - 4.0 * rp.T - c * c;
    auto h = [&](double p) {
        return -4.0 * p * c + (c * c / (p * p)) * std::exp(-4.0 * c / p) - p * p - rhs;
    };

    SwitchRoots out{p0, std::nullopt, std::nullopt};
    if (!(p0 > c)) return out;

    // Coarse scan, then one 10x refinement pass around each crossing. A tangency
    // that the coarse grid misses entirely behaves as "no roots", matching the
    // no-violation reading of the case split.
    constexpr int kCoarse = 100000;
    const double lo = c, hi = p0;
    const double step = (hi - lo) / kCoarse;
    std::vector<double> roots;
    double pa = lo + step * 1e-3;   // open interval: stay off the endpoints
    double fa = h(pa);
    for (int i = 1; i <= kCoarse; ++i) {
        const double pb = (i == kCoarse) ? hi - step * 1e-3 : lo + step * i;
        const double fb = h(pb);
        if (fa == 0.0) {
            roots.push_back(pa);
        } else if (fa * fb < 0.0) {
            double ra = pa, rb = pb, fra = fa;
            const double fine = (rb - ra) / 10.0;
            for (int j = 1; j <= 10; ++j) {
                const double rm = (j == 10) ? rb : ra + fine * j;
                const double frm = h(rm);
                if (fra * frm <= 0.0) {
                    rb = rm;
                    break;
                }
                ra = rm;
                fra = frm;
            }
            roots.push_back(bracket_root(h, ra, rb));
        }
        pa = pb;
        fa = fb;
    }
    if (roots.size() > 2)
        throw std::runtime_error(
            "solve_switch_roots: more than two crossings of the terminal-cap equation");
    if (roots.size() >= 1) out.p1 = roots[0];
    if (roots.size() == 2) out.p2 = roots[1];
    return out;
}

double solve_C0(double phi, double T)
{
    if (!(phi > -1.5707963267948966) || !(phi < 1.5707963267948966))
        throw std::invalid_argument("solve_C0: phi must lie strictly inside (-pi/2, pi/2)");
    if (!(T > 0.0 && T <= 0.25))
        throw std::invalid_argument("solve_C0: horizon must satisfy 0 < T <= 1/4");
    const double co2 = std::cos(phi) * std::cos(phi);
    const double A = 1.0 - std::sin(phi);
    const double lhs = 2.0 * co2 * std::log(A) + A * A;
    auto g = [&](double C) { return 2.0 * co2 * std::log(C) + C * C * (1.0 - 4.0 * T) - lhs; };
    // g is strictly increasing for T <= 1/4 and g(A) = -4T A^2 < 0, so A brackets below.
    double hi = std::max(A, 1.0);
    for (int i = 0; i < 200 && g(hi) < 0.0; ++i) hi *= 2.0;
    if (g(hi) < 0.0) throw std::runtime_error("solve_C0: no upper bracket found");
    return bracket_root(g, A, hi);
}

}  // namespace loewner
