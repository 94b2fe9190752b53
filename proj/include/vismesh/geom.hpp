#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace vismesh {

/// Sentinel for an unlimited visibility range.
constexpr double kUnlimited = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double squared_norm(Point a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point a) { return std::sqrt(squared_norm(a)); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point a;
  Point b;

  Segment(Point a_, Point b_) : a(a_), b(b_) {
    if (a == b) throw std::invalid_argument("Segment: endpoints coincide");
  }
  double length() const { return distance(a, b); }
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

/// Exact sign of the 2x2 determinant of (b-a, c-a). A floating-point filter
/// handles the common case; near-degenerate inputs fall back to error-free
/// expansion arithmetic, so the sign is always correct.
Orientation orient2d(Point a, Point b, Point c);

/// Exact sign of cross(q - p, s - r).
int cross4_sign(Point p, Point q, Point r, Point s);

/// Sign of the incircle determinant: > 0 iff d lies strictly inside the
/// circumcircle of the ccw triangle (a, b, c). Filtered with exact fallback.
int incircle_sign(Point a, Point b, Point c, Point d);

/// Intersection of the ray from `origin` through `through` with `seg`.
/// Endpoint touches count; absence is an empty optional. The decision which
/// case applies is made with exact predicates, the returned point is
/// constructed in floating point.
std::optional<Point> ray_segment_intersection(Point origin, Point through,
                                              const Segment& seg);

/// Boundary-inclusive point-in-triangle test. (a, b, c) must be ccw.
bool point_in_triangle(Point p, Point a, Point b, Point c);

/// True iff p lies on the closed segment [a, b]. Exact.
bool on_segment(Point a, Point b, Point p);

/// Inclusive segment-segment intersection test (touching counts). Exact.
bool segments_intersect(Point p1, Point p2, Point p3, Point p4);

/// True iff the open segments (p1,p2) and (p3,p4) cross at a single interior
/// point of both (endpoint touches and collinear overlaps do not count).
bool segments_cross_properly(Point p1, Point p2, Point p3, Point p4);

/// Signed shoelace area of a closed loop; positive for ccw.
/// Throws std::invalid_argument for fewer than 3 vertices.
double polygon_area(const std::vector<Point>& loop);

/// Circular-arc piece of a region boundary, swept ccw from start_angle.
struct ArcEdge {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;  // end_angle >= start_angle, sweep in [0, 2*pi]

  double sweep() const { return end_angle - start_angle; }
};

/// Area of a closed region whose boundary edge i (vertices[i] to
/// vertices[(i+1) % n]) may be replaced by a ccw circular arc: shoelace area
/// plus the circular-segment correction r^2 * (sweep - sin(sweep)) / 2 per
/// arc. A full disc is a single vertex on the circle with one 2*pi arc.
double arc_region_area(const std::vector<Point>& vertices,
                       const std::vector<std::optional<ArcEdge>>& arcs);

}  // namespace vismesh
