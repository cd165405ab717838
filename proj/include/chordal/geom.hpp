#pragma once

#include <span>
#include <vector>

#include "chordal/error.hpp"

namespace chordal {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
    friend bool operator==(Point a, Point b) = default;
};

double cross(Point a, Point b);
double dot(Point a, Point b);
double norm(Point a);
double distance(Point a, Point b);

// Rotates p about center by angle radians (counterclockwise).
Point rotate(Point p, Point center, double angle);

// Infinite line through two distinct points.
class Line {
public:
    Line(Point p, Point q);

    Point p() const { return p_; }
    Point q() const { return q_; }
    Point direction() const { return q_ - p_; }

    // Positive on the left of p->q.
    double signed_distance(Point a) const;

private:
    Point p_;
    Point q_;
};

// Convex polygon with counterclockwise vertices. The constructor enforces
// the ring invariants; every geometry routine returning a Polygon goes
// through it.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }

    double diameter() const;
    Point centroid() const;

private:
    std::vector<Point> vertices_;
};

struct RegularPolygonSpec {
    int n = 4;
    double side = 1.0;
    Point center{};
    double phase = 0.0;  // angle of vertex 0 about center, radians

    // Throws invalid_spec.
    void validate() const;
    double circumradius() const;
};

Polygon regular_polygon(const RegularPolygonSpec& spec);

double signed_area(std::span<const Point> ring);
double polygon_area(const Polygon& poly);

double apothem(int n, double side);
double regular_area(int n, double side);

// Throws parallel_lines when the normalized direction cross product is
// below 1e-12.
Point line_intersection(const Line& l1, const Line& l2);

// Intersection of poly with the closed half-plane bounded by `boundary`
// that contains `keep`. Throws empty_result when fewer than three
// vertices survive.
Polygon clip_by_halfplane(const Polygon& poly, const Line& boundary, Point keep);

// Drops vertices that duplicate their predecessor or sit on a straight
// run, both judged relative to the ring's diameter.
Polygon remove_collinear(const Polygon& poly, double rel_tol = 1e-9);

}  // namespace chordal
