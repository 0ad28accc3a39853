#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loewner/boundary.hpp"
#include "loewner/dynamics.hpp"
#include "loewner/rootfind.hpp"
#include "loewner/verify.hpp"

using namespace loewner;

TEST_CASE("driver sampler: determinism, admissibility, stream independence")
{
    const DriverSampler s{1.0, 4, 0.245};
    for (std::uint64_t j : {0ull, 1ull, 17ull}) {
        const DrivingFunction a = sample_driver(s, 42, j);
        const DrivingFunction b = sample_driver(s, 42, j);
        REQUIRE(a.segments.size() == b.segments.size());
        for (std::size_t k = 0; k < a.segments.size(); ++k) {
            CHECK(a.segments[k].value == b.segments[k].value);
            CHECK(a.segments[k].end_time == b.segments[k].end_time);
        }
        CHECK(a.segments.size() <= 4);
        CHECK(a.segments.back().end_time == doctest::Approx(0.245).epsilon(1e-15));
        double prev = 0.0;
        for (const DriverSegment& seg : a.segments) {
            CHECK(seg.kind == DriverSegment::Kind::Constant);
            CHECK(std::abs(seg.value) <= 1.0);
            CHECK(seg.end_time > prev);
            prev = seg.end_time;
        }
        CHECK_NOTHROW(a.validate(0.245));
    }
    // different seeds decorrelate the first sample
    const DrivingFunction a = sample_driver(s, 1, 0);
    const DrivingFunction b = sample_driver(s, 2, 0);
    CHECK(a.segments.front().value != b.segments.front().value);

    const DriverSampler single{0.5, 1, 0.2};
    const DrivingFunction one = sample_driver(single, 9, 3);
    CHECK(one.segments.size() == 1);
    CHECK(std::abs(one.segments.front().value) <= 0.5);
}

TEST_CASE("sampled endpoints match the adaptively integrated flow")
{
    const DriverSampler s{1.0, 3, 0.245};
    const std::vector<Vec2> pts = sample_reachable(s, 8, 7);
    REQUIRE(pts.size() == 8);
    for (int j = 0; j < 8; ++j) {
        const DrivingFunction f = sample_driver(s, 7, j);
        const PhaseState e = integrate_phase(f, Horizon(0.245), 1e-12);
        CHECK(std::abs(pts[j].x - e.x) < 1e-10);
        CHECK(std::abs(pts[j].y - e.y) < 1e-10);
        CHECK(pts[j].y > 0.0);
    }
    // determinism of the whole list
    const std::vector<Vec2> again = sample_reachable(s, 8, 7);
    for (int j = 0; j < 8; ++j) {
        CHECK(pts[j].x == again[j].x);
        CHECK(pts[j].y == again[j].y);
    }
}

TEST_CASE("pooled sampler: prefixes are stable and mix segment counts")
{
    const std::vector<Vec2> big = sample_reachable_pool(0.245, 1.0, 400, 42);
    const std::vector<Vec2> small = sample_reachable_pool(0.245, 1.0, 100, 42);
    REQUIRE(big.size() == 400);
    REQUIRE(small.size() == 100);
    for (int j = 0; j < 100; ++j) {
        CHECK(small[j].x == big[j].x);
        CHECK(small[j].y == big[j].y);
    }
}

TEST_CASE("point classification against a square outline")
{
    const std::vector<Vec2> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(point_in_boundary(sq, Vec2{0.5, 0.5}, 1e-3) == Containment::Inside);
    CHECK(point_in_boundary(sq, Vec2{2.0, 0.5}, 1e-3) == Containment::Outside);
    CHECK(point_in_boundary(sq, Vec2{1.0005, 0.5}, 1e-3) == Containment::OnBoundary);
    CHECK(point_in_boundary(sq, Vec2{0.9995, 0.5}, 1e-3) == Containment::OnBoundary);
    CHECK(point_in_boundary(sq, Vec2{0.0, 0.0}, 1e-3) == Containment::OnBoundary);
    // ray level with two vertices still classifies by parity
    CHECK(point_in_boundary(sq, Vec2{0.5, 1.0 - 5e-3}, 1e-3) == Containment::Inside);
    CHECK(point_in_boundary(sq, Vec2{-0.5, 0.0 + 5e-3}, 1e-3) == Containment::Outside);
}

TEST_CASE("classification report: counters and worst violation")
{
    const std::vector<Vec2> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const std::vector<Vec2> pts = {{0.5, 0.5}, {0.2, 0.8}, {1.0002, 0.5}, {1.25, 0.5}, {3.0, 0.5}};
    const SampleReport r = classify_samples(sq, pts, 1e-3, 99);
    CHECK(r.n_samples == 5);
    CHECK(r.n_inside == 2);
    CHECK(r.n_on_boundary == 1);
    CHECK(r.n_outside == 2);
    CHECK(r.seed == 99);
    CHECK(r.max_violation == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.n_inside + r.n_on_boundary + r.n_outside == r.n_samples);
}

TEST_CASE("containment audit: no escapes in the wide-bound scenario")
{
    const SampleReport r = containment_audit(0.245, 1.0, 2000, 7);
    CHECK(r.n_samples == 2000);
    CHECK(r.n_outside == 0);
    CHECK(r.max_violation == 0.0);
    CHECK(r.n_inside + r.n_on_boundary == 2000);
    // frozen split, doubles as a determinism regression
    CHECK(r.n_inside == 1874);
    CHECK(r.n_on_boundary == 126);
}

TEST_CASE("extremal re-integration lands on the assembled rim")
{
    CHECK(extremal_sharpness(0.245, 1.0, 16) < 1e-6);
    CHECK(extremal_sharpness(0.247, 0.05, 16) < 1e-6);
}

TEST_CASE("schedule maximality defect at spot offsets")
{
    // two-segment schedule
    const double d1 = pontryagin_spot_check(0.245, 1.0, 1.1);
    CHECK(d1 >= -1e-6);
    CHECK(d1 <= 1e-12);   // the defect is a max-gap, never positive
    // three-segment schedule inside the violation window
    const double d2 = pontryagin_spot_check(0.247, 0.05, 0.07);
    CHECK(d2 >= -1e-6);
    CHECK(d2 <= 1e-12);
    // offsets outside (c, p0] are rejected
    CHECK_THROWS(pontryagin_spot_check(0.245, 1.0, 0.9));
    CHECK_THROWS(pontryagin_spot_check(0.245, 1.0, 2.0));
}

TEST_CASE("two-pole integration agrees with the top-arc closed form")
{
    for (const auto& [T, c] : {std::pair{0.245, 1.0}, std::pair{0.245, 0.1}}) {
        for (double mu : {0.0, 0.25, 0.5, 0.9}) {
            const BoundaryPoint pt = l2_point(T, c, mu);
            const Vec2 ode = integrate_two_pole(T, c, mu, 1e-12);
            CHECK(std::hypot(pt.X - ode.x, pt.Y - ode.y) < 1e-8);
        }
    }
    // frozen low-bound sample
    const Vec2 z = integrate_two_pole(0.245, 0.1, 0.1, 1e-12);
    CHECK(z.x == doctest::Approx(0.1814438561).epsilon(1e-8));
    CHECK(z.y == doctest::Approx(0.3004095397).epsilon(1e-8));
}

TEST_CASE("hausdorff distance on synthetic polygons")
{
    const std::vector<Vec2> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(hausdorff_distance(sq, sq) == doctest::Approx(0.0).epsilon(1e-15));

    std::vector<Vec2> shifted;
    for (const Vec2& v : sq) shifted.push_back(Vec2{v.x + 0.3, v.y});
    CHECK(hausdorff_distance(sq, shifted) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(hausdorff_distance(shifted, sq) == doctest::Approx(0.3).epsilon(1e-12));

    const std::vector<Vec2> big = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(hausdorff_distance(sq, big) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("capped range collapses onto the uncapped range as the bound grows")
{
    const std::vector<Vec2> unres = unrestricted_polygon(0.2, 2048);
    double prev = std::numeric_limits<double>::infinity();
    const struct {
        double c, max_allowed;
    } rows[] = {{5.0, 2e-2}, {10.0, 5e-3}, {30.0, 1e-3}};
    for (const auto& row : rows) {
        const ValueRangeBoundary b = assemble_boundary(0.2, row.c, 512);
        const double d = hausdorff_distance(b.polygon, unres);
        CHECK(d < row.max_allowed);
        CHECK(d < prev);
        prev = d;
    }
    // the c=10 gap is dominated by the top-of-range shortfall 1 - Y0
    const double Y0 = solve_Y0(RegimeParams(0.2, 10.0));
    CHECK(prev <= 1.0 - Y0 + 1e-3);
}

TEST_CASE("coverage radius: vertex sets and degenerate inputs")
{
    const std::vector<Vec2> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(boundary_coverage_radius(sq, sq) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(boundary_coverage_radius(sq, {Vec2{10.0, 10.0}}) ==
          doctest::Approx(std::hypot(10.0, 10.0)).epsilon(1e-12));
    CHECK(std::isinf(boundary_coverage_radius(sq, {})));
}

TEST_CASE("coverage radius shrinks as the sample pool grows")
{
    const ValueRangeBoundary b = assemble_boundary(0.245, 1.0, 256);
    const std::vector<Vec2> pool = sample_reachable_pool(0.245, 1.0, 20000, 42);
    const std::vector<Vec2> small(pool.begin(), pool.begin() + 2000);
    const double r_small = boundary_coverage_radius(b.polygon, small);
    const double r_big = boundary_coverage_radius(b.polygon, pool);
    CHECK(r_big <= r_small);
    CHECK(r_big < 0.05);   // already below the large-pool target at 2e4
}
