#pragma once
// Boundary curves of the value range of the tracked point at horizon T: the
// unrestricted range (no driver cap) and the capped-driver range assembled from
// extremal families. Coordinates are (X, Y) = endpoint of the tracked point.

#include <optional>
#include <string>
#include <vector>

namespace loewner {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

enum class CurveId {
    L1,            // shared bottom arc of the unrestricted boundary, cut at Y0
    L2,            // top arc: two-pole mixtures between the constant-driver corners
    L3,            // bang/follow family, full window (no cap violation)
    L4,            // mirror of L3
    L5,            // bang/follow family below the violation window
    L6,            // mirror of L5
    L7,            // bang/follow/bang family across the violation window
    L8,            // mirror of L7
    L9,            // bang/follow family above the violation window
    L10,           // mirror of L9
    Unrestricted,  // right half of the uncapped boundary
    Thm1,          // parametric cross-check form of the uncapped boundary
};

const char* curve_id_name(CurveId id);

struct BoundaryPoint {
    double X = 0.0;
    double Y = 0.0;
    double param = 0.0;   // native parameter: Y for L1, p for L3..L10, mu for L2
};

struct BoundaryCurve {
    CurveId id;
    bool mirrored = false;   // true for left-half reflections
    std::vector<BoundaryPoint> points;
};

// Right half of the uncapped boundary, 2X^2 = log(Y) (1 - 4T - Y^2), sampled on
// Y in [sqrt(1-4T), 1] with chord-adaptive refinement.
BoundaryCurve unrestricted_boundary(double T, int n);

// Same curve in the trigonometric parameterization (phi in (-pi/2, pi/2)); used as
// an independent cross-check of the closed form above. Valid for 0 < T <= 1/4.
BoundaryPoint theorem1_point(double phi, double T);

// Piecewise families of the capped problem (driver bound c).
BoundaryCurve curve_l1(double T, double c, int n);
BoundaryCurve curve_l3(double T, double c, double p_lo, double p_hi, int n,
                       CurveId id = CurveId::L3);
BoundaryCurve curve_l7(double T, double c, double p1, double p2, int n);
BoundaryCurve curve_l2(double T, double c, int n);

// Single-point evaluators used by tests and the verifier.
BoundaryPoint l3_point(double T, double c, double p);
BoundaryPoint l7_point(double T, double c, double p);
BoundaryPoint l2_point(double T, double c, double mu);

// Terminal driver value lambda(T) = X(p) - p of the bang/follow family; decides
// whether the cap is violated between the switch roots.
double l3_terminal_driver(double T, double c, double p);

struct ValueRangeBoundary {
    int case_tag = 2;                   // 1: violation window present, 2: not
    std::vector<BoundaryCurve> curves;  // stitch order, counterclockwise
    std::vector<Vec2> polygon;          // closed simple polygon (first vertex not repeated)
    double Y0 = 0.0;
    double p0 = 0.0;
    std::optional<double> p1;
    std::optional<double> p2;
    std::optional<double> single_root;  // lone cap-equation root (diagnostic only)
    double max_stitch_gap = 0.0;
};

// Assembles the full capped-range boundary counterclockwise starting at
// (0, sqrt(1-4T)). Validates the regime hypothesis c^2 >= T - (1 - e^-4)/4,
// stitch gaps (< 1e-6), mirror symmetry, orientation, and simplicity.
ValueRangeBoundary assemble_boundary(double T, double c, int n_per_curve);

// Closed polygon of the uncapped range (right half plus mirrored left half).
std::vector<Vec2> unrestricted_polygon(double T, int n);

// Polygon utilities shared with the verifier and tests.
double polygon_signed_area(const std::vector<Vec2>& poly);
bool polygon_is_simple(const std::vector<Vec2>& poly);
double distance_to_polyline(const std::vector<Vec2>& pts, Vec2 q, bool closed);

}  // namespace loewner
