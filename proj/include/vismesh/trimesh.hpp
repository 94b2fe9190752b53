#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vismesh/geom.hpp"
#include "vismesh/mapio.hpp"

namespace vismesh {

struct MeshTriangle {
  std::array<int, 3> v{};  // vertex ids, ccw
  std::array<int, 3> e{};  // edge ids, e[i] opposite v[i]
  std::array<int, 3> n{};  // neighbor triangle across e[i], -1 at boundary
};

struct MeshEdge {
  std::array<int, 2> v{};   // endpoint vertex ids
  std::array<int, 2> t{};   // incident triangles, t[1] == -1 for boundary
  bool boundary = false;
};

/// Triangulation of a PolygonMap. Vertices are exactly the map vertices (no
/// Steiner points), triangles are ccw and tile the map, and for n vertices
/// and h holes there are n + 2h - 2 triangles and n + 3h - 3 interior edges.
struct TriMesh {
  std::vector<Point> vertices;
  std::vector<MeshTriangle> triangles;
  std::vector<MeshEdge> edges;

  int interior_edge_count() const;
  double triangle_area(int t) const;
  Point triangle_centroid(int t) const;
  Point bbox_min() const;
  Point bbox_max() const;
  /// Snapping tolerance for constructed points: 1e-12 * bbox diagonal.
  double epsilon() const;

  /// Index (0..2) of vertex `v` within triangle `t`; -1 if absent.
  int vertex_index_in(int t, int v) const;
  /// Index (0..2) of edge `e` within triangle `t`; -1 if absent.
  int edge_index_in(int t, int e) const;
  /// Triangles incident to vertex `v`, in no particular order.
  std::vector<int> triangles_around_vertex(int v) const;
};

/// Constrained Delaunay triangulation of the map: incremental insertion,
/// constraint recovery by flipping, Delaunay restoration among
/// non-constrained edges, then removal of outside/hole triangles.
TriMesh build_cdt(const PolygonMap& map);

/// Rebuilds adjacency and edge records from raw ccw vertex triples. Throws
/// ValidationError if the triples do not triangulate the map.
TriMesh mesh_from_triangles(const PolygonMap& map,
                            const std::vector<std::array<int, 3>>& tris);

struct MeshValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

/// Checks every TriMesh invariant including Euler counts and total area.
/// Violations are listed, never thrown.
MeshValidationReport validate_mesh(const TriMesh& mesh, const PolygonMap& map);

/// Uniform grid over the mesh bounding box; each cell lists exactly the
/// triangles it intersects (ids sorted ascending).
struct BucketGrid {
  Point origin;
  double cell_size = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<std::vector<int>> cells;  // row-major, y * nx + x

  const std::vector<int>& cell(int cx, int cy) const {
    return cells[static_cast<std::size_t>(cy) * nx + cx];
  }
};

/// Default cell size: max(map width, height) / ceil(sqrt(2 * #triangles)).
BucketGrid build_buckets(const TriMesh& mesh,
                         std::optional<double> cell_size = std::nullopt);

constexpr int kOutside = -1;

/// A triangle containing q (boundary-inclusive), or kOutside. Ties on shared
/// edges/vertices resolve to the lowest triangle id.
int locate_triangle(const BucketGrid& grid, const TriMesh& mesh, Point q);

}  // namespace vismesh
