#include "plategoal/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace plategoal {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_mesh(std::ostream& os, const Mesh& mesh) {
  os << mesh.num_vertices() << ' ' << mesh.num_edges() << ' ' << mesh.num_triangles() << '\n';
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const Point& p = mesh.vertex(v);
    os << fmt17(p.x) << ' ' << fmt17(p.y) << ' ' << (mesh.boundary_vertex(v) ? 1 : 0) << '\n';
  }
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Triangle& tr = mesh.triangle(t);
    const int r = mesh.refinement_edge(t);
    os << tr[r] << ' ' << tr[(r + 1) % 3] << ' ' << tr[(r + 2) % 3] << '\n';
  }
}

void write_mesh(const std::string& path, const Mesh& mesh) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_mesh(os, mesh);
  if (!os) throw std::runtime_error("write failed: " + path);
}

Mesh read_mesh(std::istream& is) {
  int nv = 0, ne = 0, nt = 0;
  if (!(is >> nv >> ne >> nt) || nv < 0 || ne < 0 || nt < 0) {
    throw MeshError("mesh file: bad header");
  }
  std::vector<Point> verts(nv);
  std::vector<int> flags(nv);
  for (int v = 0; v < nv; ++v) {
    if (!(is >> verts[v].x >> verts[v].y >> flags[v])) throw MeshError("mesh file: bad vertex line");
  }
  std::vector<Triangle> tris(nt);
  for (int t = 0; t < nt; ++t) {
    if (!(is >> tris[t][0] >> tris[t][1] >> tris[t][2])) {
      throw MeshError("mesh file: bad triangle line");
    }
  }
  Mesh mesh = Mesh::build(std::move(verts), std::move(tris), std::vector<std::uint8_t>(nt, 0),
                          std::vector<int>(nt, 0));
  if (mesh.num_edges() != ne) throw MeshError("mesh file: edge count does not match topology");
  for (int v = 0; v < nv; ++v) {
    if ((flags[v] != 0) != mesh.boundary_vertex(v)) {
      throw MeshError("mesh file: boundary flag of vertex " + std::to_string(v) + " is inconsistent");
    }
  }
  return mesh;
}

Mesh read_mesh(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_mesh(is);
}

}  // namespace plategoal
