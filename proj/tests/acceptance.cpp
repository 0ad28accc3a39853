// Acceptance gate: one pass/fail line per criterion, nonzero exit on any failure.
// Each criterion re-derives its expected values independently of the library
// internals it exercises (closed forms, conservation laws, scenario audits).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <unistd.h>

#include "loewner/boundary.hpp"
#include "loewner/cli.hpp"
#include "loewner/dynamics.hpp"
#include "loewner/io.hpp"
#include "loewner/rootfind.hpp"
#include "loewner/verify.hpp"

using namespace loewner;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, double seconds, double budget)
{
    if (budget > 0.0 && seconds >= budget) pass = false;
    std::string timing = "[" + std::to_string(seconds).substr(0, 5) + "s";
    if (budget > 0.0) timing += " / " + std::to_string((int)budget) + "s budget";
    timing += "]";
    std::printf("%s  #%-2d %s  %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), timing.c_str());
    if (!pass) ++failures;
}

struct Timer {
    clock_type::time_point t0 = clock_type::now();
    double seconds() const
    {
        return std::chrono::duration<double>(clock_type::now() - t0).count();
    }
};

DrivingFunction constant_driver(double a, double T)
{
    DrivingFunction f;
    f.segments.push_back({DriverSegment::Kind::Constant, a, T});
    f.bound = std::abs(a);
    return f;
}

std::string fmt(double v)
{
    std::ostringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

void criterion_1()
{
    Timer t;
    const double T = 0.245;
    const PhaseState e = integrate_phase(constant_driver(0.0, T), Horizon(T), 1e-11);
    const double err = std::hypot(e.x - 0.0, e.y - std::sqrt(1.0 - 4.0 * T));
    report(1, err < 1e-9, "still driver lands at (0, sqrt(1-4T)), err " + fmt(err), t.seconds(),
           1.0);
}

void criterion_2()
{
    Timer t;
    double worst_drift = 0.0, worst_match = 0.0;
    for (double a : {0.05, -0.05, 0.1, -0.1, 1.0, -1.0}) {
        for (double T : {0.1, 0.2, 0.245}) {
            const Trajectory traj =
                integrate_phase_trajectory(constant_driver(a, T), Horizon(T), 1e-10);
            const ConservedDrift d = conserved_drift(traj, a);
            worst_drift = std::max({worst_drift, d.product, d.balance});
            const PhaseState cf = constant_driver_endpoint(a, T);
            worst_match = std::max(
                worst_match, std::hypot(cf.x - traj.end.x, cf.y - traj.end.y));
        }
    }
    report(2,
           worst_drift < 1e-8 && worst_match < 1e-9,
           "constant-driver invariants: drift " + fmt(worst_drift) + ", closed-form gap " +
               fmt(worst_match),
           t.seconds(), 5.0);
}

void criterion_3()
{
    Timer t;
    std::mt19937_64 gen(2026);
    std::uniform_real_distribution<double> dpsi(-2.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        AdjointState adj0{dpsi(gen), dpsi(gen)};
        if (std::abs(adj0.psi1) < 0.1) adj0.psi1 = std::copysign(0.1, adj0.psi1 + 1e-3);
        const auto samples = integrate_full_hamiltonian(adj0, Horizon(0.2), 1e-10);
        const double p0 = samples.front().offset, h0 = samples.front().h;
        for (const ExtremalSample& s : samples)
            worst = std::max({worst, std::abs(s.offset - p0), std::abs(s.h - h0)});
    }
    report(3, worst < 1e-8, "extremal flow holds offset and energy constant, drift " + fmt(worst),
           t.seconds(), 0.0);
}

void criterion_4()
{
    Timer t;
    const double T = 0.2;
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double phi = -1.5707963267948966 + 3.141592653589793 * (k + 0.5) / 100.0;
        const BoundaryPoint pt = theorem1_point(phi, T);
        worst = std::max(worst, std::abs(2.0 * pt.X * pt.X -
                                         std::log(pt.Y) * (1.0 - 4.0 * T - pt.Y * pt.Y)));
    }
    report(4, worst < 1e-8, "parametric rim satisfies the closed-form relation, residual " +
                               fmt(worst),
           t.seconds(), 0.0);
}

void criterion_5()
{
    Timer t;
    const double T = 0.247;
    const double c = std::sqrt(T - (1.0 - std::exp(-4.0)) / 4.0);
    const double Y0 = solve_Y0(RegimeParams(T, c));
    const double err = std::abs(Y0 - std::exp(-2.0));
    report(5, err < 1e-10, "threshold bound gives the common mixing level e^-2, err " + fmt(err),
           t.seconds(), 0.0);
}

void criterion_6()
{
    Timer t;
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dT(0.05, 0.2495), dc(0.05, 3.0);
    double worst = 0.0;
    int done = 0;
    while (done < 50) {
        const double T = dT(gen), c = dc(gen);
        const RegimeParams rp(T, c);
        if (!rp.start_bound_binds()) continue;
        const double p0 = solve_p0(rp);
        worst = std::max(worst,
                         std::abs(p0 * p0 - c * c / (p0 * p0) - c * c + 1.0 - 4.0 * T));
        ++done;
    }
    report(6, worst < 1e-12, "largest follow offset satisfies its identity, residual " + fmt(worst),
           t.seconds(), 0.0);
}

void criterion_7()
{
    Timer t;
    const double s1 = extremal_sharpness(0.245, 1.0, 64);
    const double s2 = extremal_sharpness(0.247, 0.05, 64);
    report(7, s1 < 1e-6 && s2 < 1e-6,
           "re-integrated extremal drivers land on the rim: " + fmt(s1) + " / " + fmt(s2),
           t.seconds(), 30.0);
}

void criterion_8()
{
    Timer t;
    bool pass = true;
    std::string detail;
    for (double c : {1.0, 0.1}) {
        const SampleReport r = containment_audit(0.245, c, 10000, 42);
        const std::vector<Vec2> pts = sample_reachable_pool(0.245, c, 10000, 42);
        const SampleReport u =
            classify_samples(unrestricted_polygon(0.245, 512), pts, 1e-3, 42);
        if (!detail.empty()) detail += "; ";
        detail += "c=" + fmt(c) + ": outside " + std::to_string(r.n_outside) + " (worst " +
                  fmt(r.max_violation) + "), outside uncapped " + std::to_string(u.n_outside);
        pass = pass && r.n_outside == 0 && u.n_outside == 0;
    }
    report(8, pass, "containment audit, 1e4 drivers each: " + detail, t.seconds(), 60.0);
}

void criterion_9()
{
    Timer t;
    bool pass = true;
    std::string detail;
    const struct {
        double T, c;
    } scenarios[] = {{0.245, 1.0}, {0.245, 0.1}, {0.247, 0.05}};
    for (const auto& sc : scenarios) {
        const ValueRangeBoundary b = assemble_boundary(sc.T, sc.c, 256);
        // symmetry of the stitched outline
        double asym = 0.0;
        for (const Vec2& v : b.polygon)
            asym = std::max(asym, distance_to_polyline(b.polygon, Vec2{-v.x, v.y}, true));
        // independent case decision: does the follow family's terminal driver cross c?
        const double p0 = solve_p0(RegimeParams(sc.T, sc.c));
        double worst_term = -1e100;
        for (int k = 1; k < 4000; ++k) {
            const double p = sc.c + (p0 - sc.c) * k / 4000.0;
            worst_term = std::max(worst_term, l3_terminal_driver(sc.T, sc.c, p));
        }
        const int case_scan = worst_term > sc.c ? 1 : 2;
        if (!detail.empty()) detail += "; ";
        detail += "c=" + fmt(sc.c) + ": gap " + fmt(b.max_stitch_gap) + ", asym " + fmt(asym) +
                  ", case " + std::to_string(b.case_tag);
        pass = pass && b.max_stitch_gap < 1e-6 && asym < 1e-6 && b.case_tag == case_scan &&
               polygon_is_simple(b.polygon);
    }
    report(9, pass, "stitching, symmetry and case tags: " + detail, t.seconds(), 0.0);
}

void criterion_10()
{
    Timer t;
    const double cs[] = {0.1, 0.5, 1.0, 2.0};
    bool pass = true;
    std::string detail;
    ValueRangeBoundary outer = assemble_boundary(0.245, cs[0], 2048);
    for (int i = 1; i < 4; ++i) {
        ValueRangeBoundary inner = std::move(outer);
        outer = assemble_boundary(0.245, cs[i], 2048);
        int escaped = 0;
        for (const Vec2& v : inner.polygon)
            if (point_in_boundary(outer.polygon, v, 1e-6) == Containment::Outside) ++escaped;
        if (!detail.empty()) detail += "; ";
        detail += "c=" + fmt(cs[i - 1]) + " in c=" + fmt(cs[i]) + ": " +
                  std::to_string(escaped) + " escapes";
        pass = pass && escaped == 0;
    }
    report(10, pass, "ranges nest as the bound grows: " + detail, t.seconds(), 0.0);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_11()
{
    Timer t;
    const std::filesystem::path dir = std::filesystem::temp_directory_path() /
                                      ("loewner_acceptance_" + std::to_string(::getpid()));
    // identical flags both times (same --out), then compare stdout and every file byte for byte
    auto run_once = [&]() {
        const std::string b = (dir / "b").string();
        const std::string v = (dir / "v").string();
        std::ostringstream out, err;
        int code = run_cli({"boundary", "--T", "0.245", "--c", "1", "--out", b}, out, err);
        code += run_cli({"verify", "--T", "0.245", "--c", "1", "--samples", "2000", "--points",
                         "128", "--out", v},
                        out, err);
        std::string files;
        std::vector<std::filesystem::path> produced;
        for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
            if (e.is_regular_file()) produced.push_back(e.path());
        std::sort(produced.begin(), produced.end());
        for (const auto& p : produced)
            files += p.filename().string() + "\n" + slurp(p);
        return std::tuple<int, std::string, std::string>(code, out.str(), files);
    };
    const auto r1 = run_once();
    const auto r2 = run_once();
    const bool pass = std::get<0>(r1) == 0 && std::get<0>(r2) == 0 &&
                      std::get<1>(r1) == std::get<1>(r2) && std::get<2>(r1) == std::get<2>(r2) &&
                      !std::get<2>(r1).empty();
    std::filesystem::remove_all(dir);
    report(11, pass, "boundary and verify runs are byte-identical across repeats", t.seconds(),
           0.0);
}

}  // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
