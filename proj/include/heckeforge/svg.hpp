#pragma once

#include <heckeforge/domains.hpp>
#include <heckeforge/format.hpp>

#include <string>
#include <vector>

namespace heckeforge {

/// Everything a domain picture needs: the box, its grading loci, the view
/// window in unit coordinates, and the pixel scale. Tiles are drawn as
/// rectangles, locus positions as full-height (or full-width) segments —
/// dashed for simplices, solid for complexes.
struct RenderSpec {
    BoxDomain domain;
    std::vector<GradingLocus> loci;
    Interval window_x{0, 1};
    Interval window_y{0, 0.5};
    double scale = 200;     // pixels per unit
    bool axis_labels = false;
    bool locus_labels = false;
};

/// Deterministic SVG 1.1 document: one <rect> per n=1 tile overlapping the
/// window, one <line> per locus position inside it, optional <text>
/// annotations. All coordinates go through format_double (12 significant
/// digits), so equal specs render byte-identically.
inline std::string render_domain_svg(const RenderSpec& spec) {
    if (spec.window_x.empty() || spec.window_y.empty() ||
        !(spec.window_x.length() > 0) || !(spec.window_y.length() > 0))
        throw std::domain_error("render_domain_svg: degenerate window");
    if (!(spec.scale > 0)) throw std::domain_error("render_domain_svg: scale must be > 0");

    const double W = spec.window_x.length() * spec.scale;
    const double H = spec.window_y.length() * spec.scale;
    auto px = [&](double x) { return (x - spec.window_x.lo) * spec.scale; };
    auto py = [&](double y) { return (spec.window_y.hi - y) * spec.scale; }; // svg y grows down
    auto f = [](double v) { return format_double(v); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + f(W) +
           "\" height=\"" + f(H) + "\" viewBox=\"0 0 " + f(W) + " " + f(H) + "\">\n";

    for (const Tile& t : tile(spec.domain, 1, spec.window_x)) {
        const Interval& xr = t.box.x_range;
        const Interval& yr = t.box.y_range;
        out += "<rect x=\"" + f(px(xr.lo)) + "\" y=\"" + f(py(yr.hi)) + "\" width=\"" +
               f(xr.length() * spec.scale) + "\" height=\"" + f(yr.length() * spec.scale) +
               "\" fill=\"#e8edf4\" stroke=\"#345\" stroke-width=\"1\"/>\n";
    }

    for (const GradingLocus& l : spec.loci) {
        const Interval& along = l.horizontal_coordinate() ? spec.window_x : spec.window_y;
        const char* dash = l.kind == LocusKind::Simplex
                               ? " stroke-dasharray=\"6 4\""
                               : "";
        const char* color = l.kind == LocusKind::Simplex ? "#b3261e" : "#1a5fb4";
        for (double pos : grading_positions(l, along)) {
            std::string line = "<line ";
            if (l.horizontal_coordinate())
                line += "x1=\"" + f(px(pos)) + "\" y1=\"0\" x2=\"" + f(px(pos)) +
                        "\" y2=\"" + f(H) + "\"";
            else
                line += "x1=\"0\" y1=\"" + f(py(pos)) + "\" x2=\"" + f(W) + "\" y2=\"" +
                        f(py(pos)) + "\"";
            line += std::string(" stroke=\"") + color + "\" stroke-width=\"2\"" + dash + "/>\n";
            out += line;
            if (spec.locus_labels) {
                std::string label = std::string(to_string(l.kind)) + " " + to_string(l.axis) +
                                    "=" + f(pos);
                if (l.horizontal_coordinate())
                    out += "<text x=\"" + f(px(pos) + 4) + "\" y=\"14\" font-size=\"12\">" +
                           label + "</text>\n";
                else
                    out += "<text x=\"4\" y=\"" + f(py(pos) - 4) + "\" font-size=\"12\">" +
                           label + "</text>\n";
            }
        }
    }

    if (spec.axis_labels) {
        out += "<text x=\"" + f(W - 16) + "\" y=\"" + f(H - 6) + "\" font-size=\"12\">x</text>\n";
        out += "<text x=\"6\" y=\"16\" font-size=\"12\">y</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace heckeforge
