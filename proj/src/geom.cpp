#include "vismesh/geom.hpp"

#include <cmath>
#include <numbers>

namespace vismesh {

bool point_in_triangle(Point p, Point a, Point b, Point c) {
  return orient2d(a, b, p) != Orientation::CW &&
         orient2d(b, c, p) != Orientation::CW &&
         orient2d(c, a, p) != Orientation::CW;
}

bool on_segment(Point a, Point b, Point p) {
  if (orient2d(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point p1, Point p2, Point p3, Point p4) {
  const Orientation o1 = orient2d(p1, p2, p3);
  const Orientation o2 = orient2d(p1, p2, p4);
  const Orientation o3 = orient2d(p3, p4, p1);
  const Orientation o4 = orient2d(p3, p4, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == Orientation::Collinear && on_segment(p1, p2, p3)) return true;
  if (o2 == Orientation::Collinear && on_segment(p1, p2, p4)) return true;
  if (o3 == Orientation::Collinear && on_segment(p3, p4, p1)) return true;
  if (o4 == Orientation::Collinear && on_segment(p3, p4, p2)) return true;
  return false;
}

bool segments_cross_properly(Point p1, Point p2, Point p3, Point p4) {
  const Orientation o1 = orient2d(p1, p2, p3);
  const Orientation o2 = orient2d(p1, p2, p4);
  const Orientation o3 = orient2d(p3, p4, p1);
  const Orientation o4 = orient2d(p3, p4, p2);
  return o1 != o2 && o3 != o4 && o1 != Orientation::Collinear &&
         o2 != Orientation::Collinear && o3 != Orientation::Collinear &&
         o4 != Orientation::Collinear;
}

double polygon_area(const std::vector<Point>& loop) {
  if (loop.size() < 3)
    throw std::invalid_argument("polygon_area: need at least 3 vertices");
  // Shoelace relative to the first vertex for better conditioning.
  const Point o = loop.front();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < loop.size(); ++i)
    twice += cross(loop[i] - o, loop[i + 1] - o);
  return 0.5 * twice;
}

std::optional<Point> ray_segment_intersection(Point origin, Point through,
                                              const Segment& seg) {
  if (origin == through)
    throw std::invalid_argument("ray_segment_intersection: degenerate ray");

  const Orientation oa = orient2d(origin, through, seg.a);
  const Orientation ob = orient2d(origin, through, seg.b);

  if (oa == ob) {
    if (oa != Orientation::Collinear) return std::nullopt;  // same strict side
    // Segment lies on the ray's supporting line; report the nearest point
    // with non-negative ray parameter.
    const Point d = through - origin;
    const double ta = dot(seg.a - origin, d);
    const double tb = dot(seg.b - origin, d);
    if (ta < 0.0 && tb < 0.0) return std::nullopt;
    if (ta >= 0.0 && tb >= 0.0) return ta <= tb ? seg.a : seg.b;
    return origin;  // origin lies inside the overlap
  }
  if (oa == Orientation::Collinear || ob == Orientation::Collinear) {
    const Point p = (oa == Orientation::Collinear) ? seg.a : seg.b;
    if (dot(p - origin, through - origin) >= 0.0) return p;
    return std::nullopt;
  }

  // Proper straddle of the ray's line. Ray parameter t = num / den with
  // num = cross(a - o, b - a), den = cross(through - o, b - a); den != 0
  // here since the endpoints lie on strict opposite sides.
  const int num = static_cast<int>(orient2d(origin, seg.a, seg.b));
  const int den = cross4_sign(origin, through, seg.a, seg.b);
  if (num == 0) return origin;  // origin on the segment itself
  if (num != den) return std::nullopt;  // intersection behind the origin

  const Point d = through - origin;
  const Point ab = seg.b - seg.a;
  const double t = cross(seg.a - origin, ab) / cross(d, ab);
  return origin + t * d;
}

double arc_region_area(const std::vector<Point>& vertices,
                       const std::vector<std::optional<ArcEdge>>& arcs) {
  if (vertices.empty())
    throw std::invalid_argument("arc_region_area: empty region");
  if (arcs.size() != vertices.size())
    throw std::invalid_argument("arc_region_area: one arc slot per edge");

  double twice = 0.0;
  const Point o = vertices.front();
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    twice += cross(vertices[i] - o, vertices[i + 1] - o);
  double area = 0.5 * twice;

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (const auto& arc : arcs) {
    if (!arc) continue;
    const double sweep = arc->sweep();
    if (!(arc->radius > 0.0) || sweep < -1e-12 || sweep > kTwoPi + 1e-12)
      throw std::invalid_argument("arc_region_area: invalid arc sweep");
    area += 0.5 * arc->radius * arc->radius * (sweep - std::sin(sweep));
  }
  return area;
}

}  // namespace vismesh
