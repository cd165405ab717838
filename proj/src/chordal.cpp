#include "chordal/chordal.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace chordal {

namespace {

constexpr double kRegularityTol = 1e-9;

std::string fmt_d(double d) { return std::to_string(d); }

void check_regular(const Polygon& inner, Point center, double t) {
    const std::size_t n = inner.size();
    const double radius = distance(center, inner[0]);
    for (std::size_t i = 0; i < n; ++i) {
        const double edge = distance(inner[i], inner[(i + 1) % n]);
        if (std::abs(edge - t) > kRegularityTol * t ||
            std::abs(distance(center, inner[i]) - radius) > kRegularityTol * t) {
            throw GeometryError(ErrorKind::degenerate_result, "sub-polygon is not regular within tolerance");
        }
    }
}

void check_square_offset(double side_offset) {
    if (!(side_offset >= 0.0 && side_offset < 1.0)) {
        throw GeometryError(ErrorKind::domain, "square side offset must lie in [0, 1)");
    }
}

}  // namespace

Point perimeter_point(const RegularPolygonSpec& spec, double d) {
    spec.validate();
    if (!(d >= 0.0 && d <= spec.n)) {
        throw GeometryError(ErrorKind::domain, "side distance " + fmt_d(d) + " outside [0, n]");
    }
    const Polygon outer = regular_polygon(spec);
    const double whole = std::floor(d);
    const auto k = static_cast<std::size_t>(whole) % outer.size();
    const double frac = d - whole;
    const Point a = outer[k];
    if (frac == 0.0) return a;
    const Point b = outer[(k + 1) % outer.size()];
    return a + frac * (b - a);
}

void check_side_distance(int n, double d) {
    if (n < 3) throw GeometryError(ErrorKind::invalid_spec, "regular polygon needs n >= 3");
    if (!(d > 1.0 && d < n - 1.0)) {
        throw GeometryError(ErrorKind::domain, "side distance d = " + fmt_d(d) + " outside (1, n-1)");
    }
    if (std::abs(d - n / 2.0) <= kCenterGuard) {
        throw GeometryError(ErrorKind::center_chord,
                            "center-chord degeneracy: d = n/2 sends every chord through the center");
    }
}

ChordalSystem build_chordal_system(const RegularPolygonSpec& spec, double d) {
    spec.validate();
    check_side_distance(spec.n, d);
    const Polygon outer = regular_polygon(spec);
    const Point end0 = perimeter_point(spec, d);

    ChordalSystem system{spec, d, {}};
    system.chords.reserve(spec.n);
    for (int k = 0; k < spec.n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / spec.n;
        system.chords.push_back(Chord{k, outer[k], rotate(end0, spec.center, angle), d});
    }
    return system;
}

SubPolygonResult sub_polygon(const ChordalSystem& system) {
    const Polygon outer = regular_polygon(system.spec);
    Polygon region = outer;
    for (const Chord& chord : system.chords) {
        region = clip_by_halfplane(region, chord.line(), system.spec.center);
    }
    Polygon inner = remove_collinear(region);

    const double area_outer = polygon_area(outer);
    const double area_inner = polygon_area(inner);
    const auto n = static_cast<std::size_t>(system.spec.n);
    if (inner.size() != n) {
        throw GeometryError(ErrorKind::degenerate_result,
                            "chords bound " + std::to_string(inner.size()) + " vertices, expected " +
                                std::to_string(n));
    }
    if (area_inner < 1e-12 * area_outer) {
        throw GeometryError(ErrorKind::vanishing_inner, "inner polygon area is below 1e-12 of the outer area");
    }

    double perimeter = 0.0;
    for (std::size_t i = 0; i < n; ++i) perimeter += distance(inner[i], inner[(i + 1) % n]);
    const double t = perimeter / static_cast<double>(n);
    check_regular(inner, system.spec.center, t);

    return SubPolygonResult{std::move(inner), t, area_outer, area_inner, area_outer / area_inner};
}

double area_ratio(int n, double d) {
    check_side_distance(n, d);
    return sub_polygon(build_chordal_system(RegularPolygonSpec{.n = n, .side = 1.0}, d)).ratio;
}

double square_t_closed(double side_offset) {
    check_square_offset(side_offset);
    return (1.0 - side_offset) / std::sqrt(side_offset * side_offset + 1.0);
}

double square_ratio_closed(double side_offset) {
    check_square_offset(side_offset);
    const double gap = 1.0 - side_offset;
    return (side_offset * side_offset + 1.0) / (gap * gap);
}

double square_d_for_m(double m) {
    if (!(m > 1.0) || !std::isfinite(m)) {
        throw GeometryError(ErrorKind::domain, "target ratio m must exceed 1");
    }
    return 1.0 + (m - std::sqrt(2.0 * m - 1.0)) / (m - 1.0);
}

}  // namespace chordal
