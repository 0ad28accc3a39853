#include "loewner/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace loewner {

std::string format_double(double v)
{
    if (v == 0.0) return "0";   // collapses -0 as well
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<CurveRow>& rows)
{
    os << "curve_id,param,x,y\n";
    for (const CurveRow& r : rows) {
        os << r.curve << ',' << format_double(r.param) << ',' << format_double(r.X)
           << ',' << format_double(r.Y) << '\n';
    }
}

namespace {

double parse_field(const std::string& line, std::size_t from, std::size_t to)
{
    double v = 0.0;
    auto res = std::from_chars(line.data() + from, line.data() + to, v);
    if (res.ec != std::errc() || res.ptr != line.data() + to)
        throw std::runtime_error("read_csv: malformed number in line: " + line);
    return v;
}

}  // namespace

std::vector<CurveRow> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("read_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "curve_id,param,x,y")
        throw std::runtime_error("read_csv: unexpected header: " + line);

    std::vector<CurveRow> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        std::size_t c3 = line.find(',', c2 == std::string::npos ? c2 : c2 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
            throw std::runtime_error("read_csv: malformed line: " + line);
        CurveRow r;
        r.curve = line.substr(0, c1);
        r.param = parse_field(line, c1 + 1, c2);
        r.X = parse_field(line, c2 + 1, c3);
        r.Y = parse_field(line, c3 + 1, line.size());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<CurveRow> curve_rows(const BoundaryCurve& curve)
{
    std::string name = curve_id_name(curve.id);
    // the reflected families already carry their own ids (l4, l6, l8, l10); a
    // suffix is only needed where one id serves both halves
    switch (curve.id) {
        case CurveId::L4:
        case CurveId::L6:
        case CurveId::L8:
        case CurveId::L10:
            break;
        default:
            if (curve.mirrored) name += "_mirror";
    }
    std::vector<CurveRow> rows;
    rows.reserve(curve.points.size());
    for (const BoundaryPoint& pt : curve.points)
        rows.push_back(CurveRow{name, pt.param, pt.X, pt.Y});
    return rows;
}

std::vector<CurveRow> boundary_rows(const ValueRangeBoundary& b)
{
    std::vector<CurveRow> rows;
    for (const BoundaryCurve& curve : b.curves) {
        std::vector<CurveRow> part = curve_rows(curve);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

namespace {

const char* curve_color(CurveId id)
{
    switch (id) {
        case CurveId::L1: return "#1f77b4";
        case CurveId::L2: return "#d62728";
        case CurveId::L3:
        case CurveId::L4:
        case CurveId::L5:
        case CurveId::L6: return "#2ca02c";
        case CurveId::L7:
        case CurveId::L8: return "#ff7f0e";
        case CurveId::L9:
        case CurveId::L10: return "#9467bd";
        case CurveId::Unrestricted: return "#444444";
        case CurveId::Thm1: return "#17becf";
    }
    return "#000000";
}

std::string svg_num(double v)
{
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (res.ec != std::errc()) return "0";
    return std::string(buf, res.ptr);
}

}  // namespace

void write_svg(std::ostream& os, const std::vector<BoundaryCurve>& curves,
               const std::string& legend, int width_px)
{
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool any = false;
    for (const BoundaryCurve& c : curves) {
        for (const BoundaryPoint& pt : c.points) {
            if (!any) {
                xmin = xmax = pt.X;
                ymin = ymax = pt.Y;
                any = true;
            } else {
                xmin = std::min(xmin, pt.X);
                xmax = std::max(xmax, pt.X);
                ymin = std::min(ymin, pt.Y);
                ymax = std::max(ymax, pt.Y);
            }
        }
    }
    if (!any) throw std::invalid_argument("write_svg: no points to draw");

    double span_x = std::max(xmax - xmin, 1e-12);
    double span_y = std::max(ymax - ymin, 1e-12);
    double margin = 0.05 * std::max(span_x, span_y);
    double w = span_x + 2.0 * margin;
    double h = span_y + 2.0 * margin;
    double scale = width_px / w;   // same scale on both axes
    double height_px = h * scale;

    auto px = [&](double X) { return (X - xmin + margin) * scale; };
    auto py = [&](double Y) { return height_px - (Y - ymin + margin) * scale; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px
       << "\" height=\"" << svg_num(height_px) << "\" viewBox=\"0 0 " << width_px << ' '
       << svg_num(height_px) << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const BoundaryCurve& c : curves) {
        if (c.points.size() < 2) continue;
        os << "  <polyline fill=\"none\" stroke=\"" << curve_color(c.id)
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            if (i) os << ' ';
            os << svg_num(px(c.points[i].X)) << ',' << svg_num(py(c.points[i].Y));
        }
        os << "\"/>\n";
    }
    if (!legend.empty()) {
        os << "  <text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"13\" "
              "fill=\"#222222\">"
           << legend << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace loewner
