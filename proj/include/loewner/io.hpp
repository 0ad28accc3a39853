#pragma once
// CSV and SVG emission for boundary curves. CSV floats use shortest
// round-trip formatting so files are byte-stable across runs.

#include <iosfwd>
#include <string>
#include <vector>

#include "loewner/boundary.hpp"

namespace loewner {

// Shortest decimal string that parses back to exactly the same double.
// Negative zero is normalized to "0".
std::string format_double(double v);

struct CurveRow {
    std::string curve;   // curve_id_name, with "_mirror" suffix when mirrored
    double param = 0.0;
    double X = 0.0;
    double Y = 0.0;
};

void write_csv(std::ostream& os, const std::vector<CurveRow>& rows);
std::vector<CurveRow> read_csv(std::istream& is);

std::vector<CurveRow> boundary_rows(const ValueRangeBoundary& b);
std::vector<CurveRow> curve_rows(const BoundaryCurve& curve);

// Standalone SVG: white background, 5% margin, y axis flipped to mathematical
// orientation, one polyline per curve with a fixed per-family palette.
void write_svg(std::ostream& os, const std::vector<BoundaryCurve>& curves,
               const std::string& legend = "", int width_px = 720);

}  // namespace loewner
