#include "chordal/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "chordal/chordal.hpp"
#include "chordal/solver.hpp"

namespace chordal {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Viewport {
    double scale;
    double origin;

    // Screen y grows downward.
    std::string x(Point p) const { return num(origin + scale * p.x); }
    std::string y(Point p) const { return num(origin - scale * p.y); }
    std::string xy(Point p) const { return x(p) + "," + y(p); }
};

std::string points_attr(const Polygon& poly, const Viewport& view) {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) out += ' ';
        out += view.xy(poly[i]);
    }
    return out;
}

std::string vertex_label(std::size_t i) {
    std::string label(1, static_cast<char>('A' + i % 26));
    if (i >= 26) label += std::to_string(i / 26);
    return label;
}

bool valid_color(const std::string& c) {
    if (c.empty()) return false;
    for (char ch : c) {
        if (ch == '"' || ch == '<' || ch == '>' || ch == '&') return false;
    }
    return true;
}

}  // namespace

void RenderOptions::validate() const {
    if (width_px < 64) throw GeometryError(ErrorKind::invalid_options, "width must be at least 64 px");
    if (margin_px < 0 || 2 * margin_px >= width_px) {
        throw GeometryError(ErrorKind::invalid_options, "margin must be non-negative and leave room to draw");
    }
    if (depth < 1 || depth > kMaxNestingDepth) {
        throw GeometryError(ErrorKind::invalid_options, "depth must lie in 1..8");
    }
    if (!(outer_stroke > 0.0 && chord_stroke > 0.0 && inner_stroke > 0.0)) {
        throw GeometryError(ErrorKind::invalid_options, "stroke widths must be positive");
    }
    if (!valid_color(outer_color) || !valid_color(chord_color) || !valid_color(inner_color)) {
        throw GeometryError(ErrorKind::invalid_options, "invalid layer color");
    }
}

std::string render_svg(int n, double d, const RenderOptions& opts) {
    opts.validate();
    check_side_distance(n, d);

    RegularPolygonSpec host{.n = n, .side = 1.0, .phase = -std::numbers::pi / 2.0 - std::numbers::pi / n};
    const Polygon outer = regular_polygon(host);
    const double radius = host.circumradius();
    const Viewport view{(opts.width_px - 2.0 * opts.margin_px) / (2.0 * radius), opts.width_px / 2.0};

    std::ostringstream svg;
    const std::string w = std::to_string(opts.width_px);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << w
        << "\" viewBox=\"0 0 " << w << ' ' << w << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << w << "\" fill=\"white\"/>\n"
        << "  <polygon class=\"outer\" points=\"" << points_attr(outer, view) << "\" fill=\"none\" stroke=\""
        << opts.outer_color << "\" stroke-width=\"" << num(opts.outer_stroke) << "\"/>\n";

    double ratio = 0.0;
    for (int level = 1; level <= opts.depth; ++level) {
        const ChordalSystem system = build_chordal_system(host, d);
        const SubPolygonResult result = sub_polygon(system);
        if (level == 1) ratio = result.ratio;

        svg << "  <g class=\"level\" data-depth=\"" << level << "\">\n";
        for (const Chord& chord : system.chords) {
            svg << "    <line class=\"chord\" x1=\"" << view.x(chord.start) << "\" y1=\"" << view.y(chord.start)
                << "\" x2=\"" << view.x(chord.end) << "\" y2=\"" << view.y(chord.end) << "\" stroke=\""
                << opts.chord_color << "\" stroke-width=\"" << num(opts.chord_stroke) << "\"/>\n";
        }
        svg << "    <polygon class=\"inner\" points=\"" << points_attr(result.inner, view)
            << "\" fill=\"none\" stroke=\"" << opts.inner_color << "\" stroke-width=\""
            << num(opts.inner_stroke) << "\"/>\n"
            << "  </g>\n";

        const Point v0 = result.inner[0];
        host = RegularPolygonSpec{.n = n, .side = result.t, .center = host.center, .phase = std::atan2(v0.y, v0.x)};
    }

    if (opts.show_labels) {
        for (std::size_t i = 0; i < outer.size(); ++i) {
            const Point out = (1.0 + 0.06 / radius) * outer[i];
            svg << "  <text x=\"" << view.x(out) << "\" y=\"" << view.y(out)
                << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\""
                << " dominant-baseline=\"middle\">" << vertex_label(i) << "</text>\n";
        }
        svg << "  <text x=\"" << opts.margin_px << "\" y=\"" << opts.width_px - opts.margin_px / 3
            << "\" font-family=\"sans-serif\" font-size=\"12\">n = " << n << ", d = " << num(d)
            << ", m = " << num(ratio) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace chordal
