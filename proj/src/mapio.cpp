#include "vismesh/mapio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vismesh/trimesh.hpp"

namespace vismesh {

namespace {

bool on_segment(Point a, Point b, Point p) {
  if (orient2d(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Inclusive segment-segment intersection test (touching counts).
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

PointLocation locate_in_loop(const std::vector<Point>& loop, Point p) {
  bool inside = false;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = loop[i];
    const Point b = loop[(i + 1) % n];
    if (on_segment(a, b, p)) return PointLocation::Boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      // Edge spans the horizontal through p; crossing lies right of p iff p
      // is on the interior side given the edge direction.
      const Orientation o = orient2d(a, b, p);
      if (b.y > a.y ? o == Orientation::CCW : o == Orientation::CW)
        inside = !inside;
    }
  }
  return inside ? PointLocation::Inside : PointLocation::Outside;
}

void check_loop_simple(const std::vector<Point>& loop, const char* what) {
  const std::size_t n = loop.size();
  if (n < 3) throw ValidationError(std::string(what) + ": fewer than 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (loop[i] == loop[(i + 1) % n])
      throw ValidationError(std::string(what) +
                            ": duplicate consecutive vertices at index " +
                            std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = loop[i];
    const Point b = loop[(i + 1) % n];
    // Adjacent edges may only share the common endpoint; a collinear
    // backtrack is a spike.
    const Point c = loop[(i + 2) % n];
    if (orient2d(a, b, c) == Orientation::Collinear &&
        dot(a - b, c - b) > 0.0)
      throw ValidationError(std::string(what) + ": boundary spike at index " +
                            std::to_string((i + 1) % n));
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
      if (segments_intersect(a, b, loop[j], loop[(j + 1) % n]))
        throw ValidationError(std::string(what) +
                              ": self-intersection between edges " +
                              std::to_string(i) + " and " + std::to_string(j));
    }
  }
}

void check_loops_disjoint(const std::vector<Point>& a,
                          const std::vector<Point>& b, const char* what) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (segments_intersect(a[i], a[(i + 1) % a.size()], b[j],
                             b[(j + 1) % b.size()]))
        throw ValidationError(std::string(what) + ": loops touch or cross");
}

}  // namespace

int PolygonMap::vertex_count() const {
  std::size_t n = outer.size();
  for (const auto& h : holes) n += h.size();
  return static_cast<int>(n);
}

std::vector<Point> PolygonMap::all_vertices() const {
  std::vector<Point> v = outer;
  for (const auto& h : holes) v.insert(v.end(), h.begin(), h.end());
  return v;
}

std::vector<std::array<int, 2>> PolygonMap::boundary_segments() const {
  std::vector<std::array<int, 2>> segs;
  segs.reserve(vertex_count());
  int base = 0;
  auto add_loop = [&](std::size_t len) {
    const int n = static_cast<int>(len);
    for (int i = 0; i < n; ++i) segs.push_back({base + i, base + (i + 1) % n});
    base += n;
  };
  add_loop(outer.size());
  for (const auto& h : holes) add_loop(h.size());
  return segs;
}

double PolygonMap::area() const {
  double a = polygon_area(outer);
  for (const auto& h : holes) a += polygon_area(h);  // holes are cw (negative)
  return a;
}

Point PolygonMap::bbox_min() const {
  Point m = outer.front();
  for (const Point& p : all_vertices()) {
    m.x = std::min(m.x, p.x);
    m.y = std::min(m.y, p.y);
  }
  return m;
}

Point PolygonMap::bbox_max() const {
  Point m = outer.front();
  for (const Point& p : all_vertices()) {
    m.x = std::max(m.x, p.x);
    m.y = std::max(m.y, p.y);
  }
  return m;
}

double PolygonMap::epsilon() const {
  return 1e-12 * distance(bbox_min(), bbox_max());
}

PointLocation locate_point_in_map(const PolygonMap& map, Point p) {
  const PointLocation out = locate_in_loop(map.outer, p);
  if (out != PointLocation::Inside) return out;
  for (const auto& h : map.holes) {
    const PointLocation loc = locate_in_loop(h, p);
    if (loc == PointLocation::Boundary) return PointLocation::Boundary;
    if (loc == PointLocation::Inside) return PointLocation::Outside;
  }
  return PointLocation::Inside;
}

void validate_map(const PolygonMap& map) {
  for (const Point& p : map.all_vertices())
    if (!is_finite(p)) throw ValidationError("map: non-finite coordinate");
  check_loop_simple(map.outer, "outer");
  if (polygon_area(map.outer) <= 0.0)
    throw ValidationError("outer: not ccw or degenerate");
  for (std::size_t k = 0; k < map.holes.size(); ++k) {
    const auto& hole = map.holes[k];
    const std::string label = "hole " + std::to_string(k);
    check_loop_simple(hole, label.c_str());
    if (polygon_area(hole) >= 0.0)
      throw ValidationError(label + ": not cw or degenerate");
    check_loops_disjoint(map.outer, hole, label.c_str());
    for (const Point& p : hole)
      if (locate_in_loop(map.outer, p) != PointLocation::Inside)
        throw ValidationError(label + ": not strictly inside the outer loop");
    for (std::size_t j = 0; j < k; ++j) {
      check_loops_disjoint(map.holes[j], hole, label.c_str());
      if (locate_in_loop(map.holes[j], hole.front()) == PointLocation::Inside ||
          locate_in_loop(hole, map.holes[j].front()) == PointLocation::Inside)
        throw ValidationError(label + ": nested holes");
    }
  }
}

namespace {

struct LineReader {
  std::istream& in;
  long line_no = 0;

  // Next meaningful line (comments stripped, blanks skipped); false at eof.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::size_t b = raw.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) continue;
      std::size_t e = raw.find_last_not_of(" \t\r\n");
      out = raw.substr(b, e - b + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  }
};

std::vector<Point> parse_loop(LineReader& r, std::size_t count) {
  std::vector<Point> loop;
  loop.reserve(count);
  std::string line;
  for (std::size_t i = 0; i < count; ++i) {
    if (!r.next(line)) r.fail("unexpected end of input inside a loop");
    std::istringstream ls(line);
    Point p;
    if (!(ls >> p.x >> p.y)) r.fail("expected 'x y', got '" + line + "'");
    std::string rest;
    if (ls >> rest) r.fail("trailing tokens after coordinates");
    loop.push_back(p);
  }
  return loop;
}

void normalize_orientations(PolygonMap& map) {
  if (map.outer.size() >= 3 && polygon_area(map.outer) < 0.0)
    std::reverse(map.outer.begin(), map.outer.end());
  for (auto& h : map.holes)
    if (h.size() >= 3 && polygon_area(h) > 0.0)
      std::reverse(h.begin(), h.end());
}

std::string format_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PolygonMap load_map(std::istream& in, const std::string& name) {
  LineReader r{in};
  std::string line;
  if (!r.next(line)) r.fail("empty input");
  if (line != "polymap 1") r.fail("expected header 'polymap 1'");

  PolygonMap map;
  map.name = name;
  bool have_outer = false;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string kw;
    std::size_t count = 0;
    ls >> kw >> count;
    if (!ls || count < 3) r.fail("expected 'OUTER k' or 'HOLE k' with k >= 3");
    if (kw == "OUTER") {
      if (have_outer) r.fail("duplicate OUTER block");
      map.outer = parse_loop(r, count);
      have_outer = true;
    } else if (kw == "HOLE") {
      if (!have_outer) r.fail("HOLE before OUTER");
      map.holes.push_back(parse_loop(r, count));
    } else {
      r.fail("unknown block '" + kw + "'");
    }
  }
  if (!have_outer) r.fail("missing OUTER block");
  normalize_orientations(map);
  validate_map(map);
  return map;
}

PolygonMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path);
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name.erase(0, slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name.erase(dot);
  return load_map(in, name);
}

void save_map(const PolygonMap& map, std::ostream& out) {
  out << "polymap 1\n";
  if (!map.name.empty()) out << "# " << map.name << " (unit: " << map.unit << ")\n";
  out << "OUTER " << map.outer.size() << "\n";
  for (const Point& p : map.outer)
    out << format_coord(p.x) << " " << format_coord(p.y) << "\n";
  for (const auto& h : map.holes) {
    out << "HOLE " << h.size() << "\n";
    for (const Point& p : h)
      out << format_coord(p.x) << " " << format_coord(p.y) << "\n";
  }
}

void save_map_file(const PolygonMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  save_map(map, out);
}

PolygonMap normalize_map(const std::vector<PolygonMap>& components) {
  if (components.empty())
    throw ValidationError("normalize_map: no components");
  std::size_t best = 0;
  double best_area = -1.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const double a = std::abs(polygon_area(components[i].outer));
    if (a > best_area) {
      best_area = a;
      best = i;
    }
  }
  PolygonMap map = components[best];
  normalize_orientations(map);
  validate_map(map);
  return map;
}

// --- trimesh format ----------------------------------------------------

namespace {

struct TokenReader {
  std::istream& in;

  template <typename T>
  T read(const char* what) {
    T v;
    if (!(in >> v)) {
      in.clear();
      const auto pos = in.tellg();
      throw ParseError(std::string("trimesh: unexpected end or bad token at byte ") +
                       std::to_string(static_cast<long>(pos)) + " while reading " +
                       what);
    }
    return v;
  }
};

}  // namespace

void save_mesh(const TriMesh& mesh, std::ostream& out) {
  out << "trimesh 1\n";
  out << mesh.vertices.size() << "\n";
  for (const Point& p : mesh.vertices)
    out << format_coord(p.x) << " " << format_coord(p.y) << "\n";
  out << mesh.triangles.size() << "\n";
  for (const MeshTriangle& t : mesh.triangles) {
    out << t.v[0] << " " << t.v[1] << " " << t.v[2] << " " << t.n[0] << " "
        << t.n[1] << " " << t.n[2] << "\n";
  }
}

void save_mesh_file(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  save_mesh(mesh, out);
}

TriMesh load_mesh(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "trimesh")
    throw ParseError("trimesh: bad header");
  if (version != 1)
    throw ParseError("trimesh: unsupported version " + std::to_string(version));

  TokenReader r{in};
  const auto nv = r.read<long>("vertex count");
  if (nv < 3) throw ParseError("trimesh: vertex count < 3");
  std::vector<Point> vertices(static_cast<std::size_t>(nv));
  for (auto& p : vertices) {
    p.x = r.read<double>("vertex x");
    p.y = r.read<double>("vertex y");
    if (!is_finite(p)) throw ValidationError("trimesh: non-finite coordinate");
  }

  const auto nt = r.read<long>("triangle count");
  if (nt < 1) throw ParseError("trimesh: triangle count < 1");
  std::vector<std::array<int, 3>> tris(static_cast<std::size_t>(nt));
  std::vector<std::array<int, 3>> file_neighbors(static_cast<std::size_t>(nt));
  for (long i = 0; i < nt; ++i) {
    for (int k = 0; k < 3; ++k) {
      const int v = r.read<int>("triangle vertex id");
      if (v < 0 || v >= nv) throw ValidationError("trimesh: vertex id out of range");
      tris[i][k] = v;
    }
    for (int k = 0; k < 3; ++k) {
      const int n = r.read<int>("triangle neighbor id");
      if (n < -1 || n >= nt) throw ValidationError("trimesh: neighbor id out of range");
      file_neighbors[i][k] = n;
    }
  }

  TriMesh mesh = detail_assemble_mesh(std::move(vertices), tris);
  for (long i = 0; i < nt; ++i)
    for (int k = 0; k < 3; ++k)
      if (mesh.triangles[i].n[k] != file_neighbors[i][k])
        throw ValidationError(
            "trimesh: stored neighbor table disagrees with triangle adjacency "
            "(triangle " + std::to_string(i) + ")");
  return mesh;
}

TriMesh load_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file: " + path);
  return load_mesh(in);
}

}  // namespace vismesh
