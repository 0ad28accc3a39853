#include "loewner/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "loewner/boundary.hpp"
#include "loewner/dynamics.hpp"
#include "loewner/io.hpp"
#include "loewner/rootfind.hpp"
#include "loewner/verify.hpp"

namespace loewner {
namespace {

struct RunConfig {
    double T = 0.245;
    double c = 1.0;
    int n_points = 256;
    int n_samples = 10000;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    double band = 1e-3;
    std::string format = "csv";
    std::string out;   // explicit path prefix; overrides the directory default
};

std::string default_out_dir()
{
    const char* env = std::getenv("LOEWNER_OUT_DIR");
    return (env && *env) ? std::string(env) : std::string(".");
}

std::string output_prefix(const RunConfig& cfg, const std::string& stem)
{
    if (!cfg.out.empty()) return cfg.out;
    return default_out_dir() + "/" + stem;
}

void open_output(std::ofstream& ofs, const std::string& path)
{
    std::filesystem::path p(path);
    if (!p.parent_path().empty()) std::filesystem::create_directories(p.parent_path());
    ofs.open(p, std::ios::binary);
    if (!ofs) throw std::runtime_error("cannot open output file " + path);
}

// Config checks shared by the subcommands; prints the failed invariant and
// returns the validation exit code, 0 when fine.
int check_common(const RunConfig& cfg, bool needs_c, std::ostream& err)
{
    if (!(cfg.T > 0.0 && cfg.T < kMaxHorizon)) {
        err << "T=" << format_double(cfg.T)
            << " rejected: the tracked point survives only up to t = 1/4, so T must lie in (0, 0.25)\n";
        return 2;
    }
    if (needs_c) {
        if (!(cfg.c > 0.0)) {
            err << "c must be positive\n";
            return 2;
        }
        RegimeParams rp(cfg.T, cfg.c);
        if (!rp.start_bound_binds()) {
            err << "bound hypothesis failed: need c^2 >= T - (1 - e^-4)/4 = "
                << format_double(rp.threshold()) << ", got c^2 = "
                << format_double(cfg.c * cfg.c)
                << "; the boundary synthesis applies only when the start bound binds\n";
            return 2;
        }
    }
    return 0;
}

BoundaryCurve mirror_unrestricted(const BoundaryCurve& right)
{
    BoundaryCurve left{right.id, true, {}};
    left.points.reserve(right.points.size());
    for (auto it = right.points.rbegin(); it != right.points.rend(); ++it)
        left.points.push_back(BoundaryPoint{-it->X, it->Y, it->param});
    return left;
}

int cmd_boundary(const RunConfig& cfg, const std::string& stem, std::ostream& out,
                 std::ostream& err)
{
    if (int rc = check_common(cfg, true, err)) return rc;

    ValueRangeBoundary b;
    try {
        b = assemble_boundary(cfg.T, cfg.c, cfg.n_points);
    } catch (const std::exception& e) {
        err << "boundary assembly failed: " << e.what() << '\n';
        return 1;
    }

    out << "T=" << format_double(cfg.T) << '\n';
    out << "c=" << format_double(cfg.c) << '\n';
    out << "case=" << b.case_tag << '\n';
    out << "Y0=" << format_double(b.Y0) << '\n';
    out << "p0=" << format_double(b.p0) << '\n';
    if (b.p1) out << "p1=" << format_double(*b.p1) << '\n';
    if (b.p2) out << "p2=" << format_double(*b.p2) << '\n';
    if (b.single_root) out << "single_root=" << format_double(*b.single_root) << '\n';
    out << "max_stitch_gap=" << format_double(b.max_stitch_gap) << '\n';

    std::string prefix = output_prefix(cfg, stem);
    std::string legend = "case " + std::to_string(b.case_tag) + "  T=" +
                         format_double(cfg.T) + "  c=" + format_double(cfg.c);
    try {
        if (cfg.format == "csv" || cfg.format == "both") {
            std::ofstream ofs;
            open_output(ofs, prefix + ".csv");
            write_csv(ofs, boundary_rows(b));
            out << "out_csv=" << prefix << ".csv\n";
        }
        if (cfg.format == "svg" || cfg.format == "both") {
            std::ofstream ofs;
            open_output(ofs, prefix + ".svg");
            write_svg(ofs, b.curves, legend);
            out << "out_svg=" << prefix << ".svg\n";
        }
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

int cmd_unrestricted(const RunConfig& cfg, bool thm1_check, const std::string& stem,
                     std::ostream& out, std::ostream& err)
{
    if (int rc = check_common(cfg, false, err)) return rc;

    std::vector<BoundaryCurve> curves;
    try {
        curves.push_back(unrestricted_boundary(cfg.T, cfg.n_points));
        curves.push_back(mirror_unrestricted(curves.front()));
    } catch (const std::exception& e) {
        err << "boundary computation failed: " << e.what() << '\n';
        return 1;
    }

    out << "T=" << format_double(cfg.T) << '\n';
    out << "y_low=" << format_double(std::sqrt(1.0 - 4.0 * cfg.T)) << '\n';

    if (thm1_check) {
        // worst defect of the parametric form against the closed oval equation
        double worst = 0.0;
        const int n = 100;
        for (int k = 0; k < n; ++k) {
            double phi = -1.5707963267948966 + 3.141592653589793 * (k + 0.5) / n;
            BoundaryPoint pt = theorem1_point(phi, cfg.T);
            double res = std::abs(2.0 * pt.X * pt.X -
                                  std::log(pt.Y) * (1.0 - 4.0 * cfg.T - pt.Y * pt.Y));
            worst = std::max(worst, res);
        }
        out << "thm1_residual=" << format_double(worst) << '\n';
    }

    std::string prefix = output_prefix(cfg, stem);
    std::string legend = "T=" + format_double(cfg.T);
    try {
        if (cfg.format == "csv" || cfg.format == "both") {
            std::ofstream ofs;
            open_output(ofs, prefix + ".csv");
            std::vector<CurveRow> rows = curve_rows(curves[0]);
            std::vector<CurveRow> more = curve_rows(curves[1]);
            rows.insert(rows.end(), more.begin(), more.end());
            write_csv(ofs, rows);
            out << "out_csv=" << prefix << ".csv\n";
        }
        if (cfg.format == "svg" || cfg.format == "both") {
            std::ofstream ofs;
            open_output(ofs, prefix + ".svg");
            write_svg(ofs, curves, legend);
            out << "out_svg=" << prefix << ".svg\n";
        }
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& stem, std::ostream& out,
               std::ostream& err)
{
    if (int rc = check_common(cfg, true, err)) return rc;
    if (cfg.n_samples == 0)
        err << "warning: --samples 0 leaves the containment audit vacuous\n";

    std::ostringstream rep;
    bool pass = false;
    try {
        ValueRangeBoundary b = assemble_boundary(cfg.T, cfg.c, cfg.n_points);
        std::vector<Vec2> pts = sample_reachable_pool(cfg.T, cfg.c, cfg.n_samples, cfg.seed);
        SampleReport sr = classify_samples(b.polygon, pts, cfg.band, cfg.seed);
        SampleReport su = classify_samples(unrestricted_polygon(cfg.T, 512), pts,
                                           cfg.band, cfg.seed);
        double sharpness = extremal_sharpness(cfg.T, cfg.c, 16, cfg.tol);

        rep << "T=" << format_double(cfg.T) << '\n';
        rep << "c=" << format_double(cfg.c) << '\n';
        rep << "case=" << b.case_tag << '\n';
        rep << "points=" << cfg.n_points << '\n';
        rep << "samples=" << cfg.n_samples << '\n';
        rep << "seed=" << cfg.seed << '\n';
        rep << "band=" << format_double(cfg.band) << '\n';
        rep << "tol=" << format_double(cfg.tol) << '\n';
        rep << "n_inside=" << sr.n_inside << '\n';
        rep << "n_on_boundary=" << sr.n_on_boundary << '\n';
        rep << "n_outside=" << sr.n_outside << '\n';
        rep << "max_violation=" << format_double(sr.max_violation) << '\n';
        rep << "n_outside_unrestricted=" << su.n_outside << '\n';
        rep << "sharpness=" << format_double(sharpness) << '\n';

        // local maximality at three representative follow offsets
        double worst_defect = std::numeric_limits<double>::infinity();
        const double quantiles[] = {0.25, 0.5, 0.75};
        const char* labels[] = {"defect_q25", "defect_q50", "defect_q75"};
        for (int i = 0; i < 3; ++i) {
            double p = cfg.c + quantiles[i] * (b.p0 - cfg.c);
            double d = pontryagin_spot_check(cfg.T, cfg.c, p, std::min(cfg.tol, 1e-10));
            rep << labels[i] << '=' << format_double(d) << '\n';
            worst_defect = std::min(worst_defect, d);
        }
        rep << "spot_check_defect=" << format_double(worst_defect) << '\n';
        rep << "coverage_radius="
            << format_double(boundary_coverage_radius(b.polygon, pts)) << '\n';

        pass = sr.n_outside == 0 && su.n_outside == 0 && sharpness < 1e-6 &&
               worst_defect >= -1e-6;
        rep << "pass=" << (pass ? 1 : 0) << '\n';
    } catch (const std::exception& e) {
        err << "verification failed to run: " << e.what() << '\n';
        return 1;
    }

    out << rep.str();
    std::string path = output_prefix(cfg, stem) + ".txt";
    try {
        std::ofstream ofs;
        open_output(ofs, path);
        ofs << rep.str();
        out << "out_report=" << path << '\n';
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return pass ? 0 : 1;
}

int cmd_figure(const std::string& preset, RunConfig cfg, std::ostream& out,
               std::ostream& err)
{
    if (preset == "fig1b_reject") {
        out << "preset fig1b asks for T=0.3; past t = 1/4 the tracked point is swallowed"
               " and the value range is no longer defined, so this scenario is out of"
               " scope and nothing is drawn\n";
        return 0;
    }
    if (preset == "fig1a") {
        cfg.T = 0.245;
        return cmd_unrestricted(cfg, false, "fig1a", out, err);
    }
    if (preset == "fig2a") {
        cfg.T = 0.245;
        cfg.c = 1.0;
        return cmd_boundary(cfg, "fig2a", out, err);
    }
    if (preset == "fig2b") {
        cfg.T = 0.245;
        cfg.c = 0.1;
        return cmd_boundary(cfg, "fig2b", out, err);
    }
    if (preset == "fig3") {
        cfg.T = 0.247;
        cfg.c = 0.05;
        return cmd_boundary(cfg, "fig3", out, err);
    }
    err << "unknown preset " << preset << '\n';
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"boundary of the set of values the chordal Loewner map can reach"
                 " at i under drivers bounded by c"};
    app.name("loewner_range");
    app.require_subcommand(1);

    RunConfig cfg;
    bool thm1_check = false;
    std::string preset;
    std::string fig_format = "both";

    CLI::App* sb = app.add_subcommand(
        "boundary", "assemble the bounded-driver boundary and export CSV/SVG");
    CLI::App* su = app.add_subcommand(
        "unrestricted", "export the unrestricted value-range oval");
    CLI::App* sv = app.add_subcommand(
        "verify", "containment, sharpness and maximality audits");
    CLI::App* sf = app.add_subcommand("figure", "named scenario presets");

    for (CLI::App* sub : {sb, su, sv}) {
        sub->add_option("--T", cfg.T, "time horizon, in (0, 0.25)")
            ->capture_default_str();
        sub->add_option("--points", cfg.n_points, "points per boundary curve")
            ->check(CLI::Range(8, 65536))
            ->capture_default_str();
        sub->add_option("--out", cfg.out,
                        "output path prefix (default: $LOEWNER_OUT_DIR or .)");
    }
    for (CLI::App* sub : {sb, sv}) {
        sub->add_option("--c", cfg.c, "driver bound, positive")->required();
    }
    for (CLI::App* sub : {sb, su}) {
        sub->add_option("--format", cfg.format, "csv, svg or both")
            ->check(CLI::IsMember({"csv", "svg", "both"}))
            ->capture_default_str();
    }
    su->add_flag("--thm1-check", thm1_check,
                 "print the worst oval-equation residual of the parametric form");
    sv->add_option("--samples", cfg.n_samples, "number of random drivers")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sv->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    sv->add_option("--tol", cfg.tol, "ODE tolerance for the audits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sv->add_option("--band", cfg.band, "half-width of the on-boundary band")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sf->add_option("preset", preset, "fig1a | fig1b_reject | fig2a | fig2b | fig3")
        ->required()
        ->check(CLI::IsMember({"fig1a", "fig1b_reject", "fig2a", "fig2b", "fig3"}));
    sf->add_option("--points", cfg.n_points, "points per boundary curve")
        ->check(CLI::Range(8, 65536))
        ->capture_default_str();
    sf->add_option("--format", fig_format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->capture_default_str();
    sf->add_option("--out", cfg.out, "output path prefix");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sb->parsed()) {
            std::string stem =
                "boundary_T" + format_double(cfg.T) + "_c" + format_double(cfg.c);
            return cmd_boundary(cfg, stem, out, err);
        }
        if (su->parsed()) {
            std::string stem = "unrestricted_T" + format_double(cfg.T);
            return cmd_unrestricted(cfg, thm1_check, stem, out, err);
        }
        if (sv->parsed()) {
            std::string stem =
                "verify_T" + format_double(cfg.T) + "_c" + format_double(cfg.c);
            return cmd_verify(cfg, stem, out, err);
        }
        if (sf->parsed()) {
            cfg.format = fig_format;
            return cmd_figure(preset, cfg, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace loewner
