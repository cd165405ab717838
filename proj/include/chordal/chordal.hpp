#pragma once

#include <vector>

#include "chordal/geom.hpp"

namespace chordal {

// Width of the excluded band around d = n/2, where every chord passes
// through the center.
inline constexpr double kCenterGuard = 1e-9;

struct Chord {
    int vertex_index = 0;
    Point start;
    Point end;
    double d = 0.0;  // side distance from start to end, in sides

    Line line() const { return Line(start, end); }
};

// The n chords of side distance d: chord 0 from vertex 0 to the perimeter
// point d sides further counterclockwise, chord k its rotation by 2*pi*k/n.
struct ChordalSystem {
    RegularPolygonSpec spec;
    double d = 0.0;
    std::vector<Chord> chords;
};

struct SubPolygonResult {
    Polygon inner;
    double t = 0.0;  // side of the inner polygon
    double area_outer = 0.0;
    double area_inner = 0.0;
    double ratio = 0.0;  // area_outer / area_inner
};

// Point at arc length d * side counterclockwise from vertex 0.
// Integer d lands exactly on vertex d mod n. Throws domain outside [0, n].
Point perimeter_point(const RegularPolygonSpec& spec, double d);

// Throws domain unless 1 < d < n - 1, center_chord when |d - n/2| <= 1e-9.
void check_side_distance(int n, double d);

ChordalSystem build_chordal_system(const RegularPolygonSpec& spec, double d);

// Clips the outer polygon by every chord line, keeping the center side.
// The result's regularity is checked, not assumed: a violation throws
// degenerate_result.
SubPolygonResult sub_polygon(const ChordalSystem& system);

// Ratio (P)/(T) on the canonical unit-side polygon (origin center, phase 0).
double area_ratio(int n, double d);

// Unit-square closed forms. side_offset is the distance from the start of
// the side S lies on (one full side after vertex 0) to S, so d = 1 + side_offset.
double square_t_closed(double side_offset);
double square_ratio_closed(double side_offset);
double square_d_for_m(double m);

}  // namespace chordal
