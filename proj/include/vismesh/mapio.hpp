#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "vismesh/geom.hpp"

namespace vismesh {

/// Input could not be parsed. Carries the 1-based line number and the byte
/// offset of the failure in the message.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally well-formed input that violates a map or mesh invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polygon with holes. The outer loop is ccw, hole loops are cw, all loops
/// are simple, holes lie strictly inside the outer loop and are pairwise
/// disjoint. Coordinates are in the map's length unit (meters by default;
/// the unit is a note only, nothing is ever converted).
struct PolygonMap {
  std::string name;
  std::string unit = "m";
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;

  int vertex_count() const;
  int hole_count() const { return static_cast<int>(holes.size()); }

  /// All vertices in id order: outer loop first, then each hole in order.
  std::vector<Point> all_vertices() const;

  /// Boundary segments as vertex-id pairs, consecutive within each loop.
  std::vector<std::array<int, 2>> boundary_segments() const;

  /// Net area: outer area minus hole areas.
  double area() const;

  Point bbox_min() const;
  Point bbox_max() const;

  /// Snapping tolerance for constructed points: 1e-12 * bbox diagonal.
  /// Never used inside predicates.
  double epsilon() const;
};

/// Throws ValidationError unless all PolygonMap invariants hold.
void validate_map(const PolygonMap& map);

/// {Out, On, In} classification of a point against the closed region.
enum class PointLocation { Outside, Boundary, Inside };
PointLocation locate_point_in_map(const PolygonMap& map, Point p);
inline bool map_contains(const PolygonMap& map, Point p) {
  return locate_point_in_map(map, p) != PointLocation::Outside;
}

/// Reads the `polymap` text format, normalizes loop orientations, and
/// validates every invariant; no partially valid map is ever returned.
PolygonMap load_map(std::istream& in, const std::string& name = "");
PolygonMap load_map_file(const std::string& path);
void save_map(const PolygonMap& map, std::ostream& out);
void save_map_file(const PolygonMap& map, const std::string& path);

/// Picks the component with the largest outer area (ties: first) and
/// validates it. Throws ValidationError on empty input.
PolygonMap normalize_map(const std::vector<PolygonMap>& components);

struct TriMesh;

void save_mesh(const TriMesh& mesh, std::ostream& out);
void save_mesh_file(const TriMesh& mesh, const std::string& path);
TriMesh load_mesh(std::istream& in);
TriMesh load_mesh_file(const std::string& path);

}  // namespace vismesh
