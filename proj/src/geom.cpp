#include "chordal/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace chordal {

namespace {

constexpr double kRelEps = 1e-12;

void require_finite(Point p, const char* what) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw GeometryError(ErrorKind::invalid_spec, std::string(what) + ": non-finite coordinate");
    }
}

double ring_diameter(std::span<const Point> ring) {
    double best = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        for (std::size_t j = i + 1; j < ring.size(); ++j) {
            best = std::max(best, distance(ring[i], ring[j]));
        }
    }
    return best;
}

// Removes consecutive (cyclic) points closer than tol.
std::vector<Point> dedupe(std::vector<Point> ring, double tol) {
    std::vector<Point> out;
    out.reserve(ring.size());
    for (const Point& p : ring) {
        if (out.empty() || distance(out.back(), p) > tol) out.push_back(p);
    }
    while (out.size() > 1 && distance(out.front(), out.back()) <= tol) out.pop_back();
    return out;
}

}  // namespace

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double distance(Point a, Point b) { return norm(b - a); }

Point rotate(Point p, Point center, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point r = p - center;
    return {center.x + c * r.x - s * r.y, center.y + s * r.x + c * r.y};
}

Line::Line(Point p, Point q) : p_(p), q_(q) {
    require_finite(p, "line");
    require_finite(q, "line");
    if (!(distance(p, q) > 0.0)) {
        throw GeometryError(ErrorKind::invalid_spec, "line: the two defining points coincide");
    }
}

double Line::signed_distance(Point a) const {
    const Point dir = direction();
    return cross(dir, a - p_) / norm(dir);
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw GeometryError(ErrorKind::invalid_spec, "polygon: fewer than 3 vertices");
    }
    for (const Point& p : vertices_) require_finite(p, "polygon");

    const double diam = ring_diameter(vertices_);
    const std::size_t n = vertices_.size();
    const double cross_eps = kRelEps * diam * diam;
    int strict_turns = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[(i + 1) % n];
        const Point& c = vertices_[(i + 2) % n];
        if (distance(a, b) <= kRelEps * diam) {
            throw GeometryError(ErrorKind::invalid_spec, "polygon: consecutive vertices coincide");
        }
        const double turn = cross(b - a, c - b);
        if (turn < -cross_eps) {
            throw GeometryError(ErrorKind::invalid_spec, "polygon: not convex or not counterclockwise");
        }
        if (turn > cross_eps) ++strict_turns;
    }
    if (strict_turns < 3 || !(signed_area(vertices_) > 0.0)) {
        throw GeometryError(ErrorKind::invalid_spec, "polygon: degenerate or clockwise ring");
    }
}

double Polygon::diameter() const { return ring_diameter(vertices_); }

Point Polygon::centroid() const {
    Point sum{};
    for (const Point& p : vertices_) sum = sum + p;
    return (1.0 / static_cast<double>(vertices_.size())) * sum;
}

void RegularPolygonSpec::validate() const {
    if (n < 3) throw GeometryError(ErrorKind::invalid_spec, "regular polygon needs n >= 3");
    if (!(side > 0.0) || !std::isfinite(side)) {
        throw GeometryError(ErrorKind::invalid_spec, "regular polygon needs side > 0");
    }
    require_finite(center, "regular polygon center");
    if (!std::isfinite(phase)) throw GeometryError(ErrorKind::invalid_spec, "regular polygon phase is not finite");
}

double RegularPolygonSpec::circumradius() const {
    return side / (2.0 * std::sin(std::numbers::pi / n));
}

Polygon regular_polygon(const RegularPolygonSpec& spec) {
    spec.validate();
    const double radius = spec.circumradius();
    std::vector<Point> ring;
    ring.reserve(spec.n);
    for (int k = 0; k < spec.n; ++k) {
        const double angle = spec.phase + 2.0 * std::numbers::pi * k / spec.n;
        ring.push_back({spec.center.x + radius * std::cos(angle), spec.center.y + radius * std::sin(angle)});
    }
    return Polygon(std::move(ring));
}

double signed_area(std::span<const Point> ring) {
    double twice = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        twice += cross(ring[i], ring[(i + 1) % n]);
    }
    return 0.5 * twice;
}

double polygon_area(const Polygon& poly) { return std::abs(signed_area(poly.vertices())); }

double apothem(int n, double side) {
    RegularPolygonSpec{.n = n, .side = side}.validate();
    return side / (2.0 * std::tan(std::numbers::pi / n));
}

double regular_area(int n, double side) {
    const double perimeter = n * side;
    return apothem(n, side) * perimeter / 2.0;
}

Point line_intersection(const Line& l1, const Line& l2) {
    const Point d1 = l1.direction();
    const Point d2 = l2.direction();
    const double denom = cross(d1, d2);
    if (std::abs(denom) < kRelEps * norm(d1) * norm(d2)) {
        throw GeometryError(ErrorKind::parallel_lines, "lines are parallel; chordal configuration is degenerate");
    }
    const double t = cross(l2.p() - l1.p(), d2) / denom;
    return l1.p() + t * d1;
}

Polygon clip_by_halfplane(const Polygon& poly, const Line& boundary, Point keep) {
    require_finite(keep, "clip keep point");
    const double diam = poly.diameter();
    const double eps = kRelEps * diam;
    const double keep_side = boundary.signed_distance(keep);
    if (std::abs(keep_side) <= eps) {
        throw GeometryError(ErrorKind::domain, "clip: keep point lies on the clipping line");
    }
    const double orient = keep_side > 0.0 ? 1.0 : -1.0;

    const std::size_t n = poly.size();
    std::vector<double> side(n);
    for (std::size_t i = 0; i < n; ++i) side[i] = orient * boundary.signed_distance(poly[i]);

    std::vector<Point> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double si = side[i];
        const double sj = side[j];
        if (si >= -eps) out.push_back(poly[i]);
        if ((si > eps && sj < -eps) || (si < -eps && sj > eps)) {
            const double t = si / (si - sj);
            out.push_back(poly[i] + t * (poly[j] - poly[i]));
        }
    }
    out = dedupe(std::move(out), eps);
    if (out.size() < 3) {
        throw GeometryError(ErrorKind::empty_result, "clip: half-plane leaves fewer than 3 vertices");
    }
    return Polygon(std::move(out));
}

Polygon remove_collinear(const Polygon& poly, double rel_tol) {
    std::vector<Point> ring(poly.vertices().begin(), poly.vertices().end());
    ring = dedupe(std::move(ring), rel_tol * poly.diameter());
    bool changed = true;
    while (changed && ring.size() > 3) {
        changed = false;
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = ring[(i + n - 1) % n];
            const Point& cur = ring[i];
            const Point& next = ring[(i + 1) % n];
            const Point a = cur - prev;
            const Point b = next - cur;
            if (std::abs(cross(a, b)) <= rel_tol * norm(a) * norm(b)) {
                ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return Polygon(std::move(ring));
}

}  // namespace chordal
