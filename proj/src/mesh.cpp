#include "plategoal/mesh.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace plategoal {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

double length2(Point a, Point b) {
  const Vec2 d = b - a;
  return d.x * d.x + d.y * d.y;
}

}  // namespace

int longest_side(const std::vector<Point>& vertices, const Triangle& t) {
  int best = 0;
  double best_len = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double len = length2(vertices[t[(i + 1) % 3]], vertices[t[(i + 2) % 3]]);
    if (len > best_len || (len == best_len && t[i] < t[best])) {
      best = i;
      best_len = len;
    }
  }
  return best;
}

Mesh Mesh::build(std::vector<Point> vertices, std::vector<Triangle> triangles) {
  std::vector<std::uint8_t> ref(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (int v : triangles[t]) {
      if (v < 0 || v >= static_cast<int>(vertices.size())) {
        throw MeshError("triangle references an invalid vertex");
      }
    }
    ref[t] = static_cast<std::uint8_t>(longest_side(vertices, triangles[t]));
  }
  std::vector<int> gen(triangles.size(), 0);
  return build(std::move(vertices), std::move(triangles), std::move(ref), std::move(gen));
}

Mesh Mesh::build(std::vector<Point> vertices, std::vector<Triangle> triangles,
                 std::vector<std::uint8_t> refinement_edge, std::vector<int> generation) {
  const int nv = static_cast<int>(vertices.size());
  const int nt = static_cast<int>(triangles.size());
  if (refinement_edge.size() != triangles.size() || generation.size() != triangles.size()) {
    throw MeshError("per-triangle data has the wrong length");
  }

  struct Side {
    int a, b;  // sorted
    int tri;
    int local;
    bool forward;  // traversed a -> b by the triangle
  };
  std::vector<Side> sides;
  sides.reserve(3 * triangles.size());
  for (int t = 0; t < nt; ++t) {
    const Triangle& tr = triangles[t];
    for (int v : tr) {
      if (v < 0 || v >= nv) throw MeshError("triangle references an invalid vertex");
    }
    if (refinement_edge[t] > 2) throw MeshError("refinement edge index out of range");
    if (signed_area(vertices[tr[0]], vertices[tr[1]], vertices[tr[2]]) <= 0.0) {
      throw MeshError("degenerate triangle " + std::to_string(t) + " (area <= 0)");
    }
    for (int i = 0; i < 3; ++i) {
      const int p = tr[(i + 1) % 3];
      const int q = tr[(i + 2) % 3];
      sides.push_back({std::min(p, q), std::max(p, q), t, i, p < q});
    }
  }
  std::sort(sides.begin(), sides.end(), [](const Side& x, const Side& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.tri < y.tri;
  });

  Mesh m;
  m.tri_edges_.assign(nt, {-1, -1, -1});
  m.tri_edges_sign_.assign(nt, {0, 0, 0});
  m.vertex_boundary_.assign(nv, 0);
  for (std::size_t i = 0; i < sides.size();) {
    std::size_t j = i;
    while (j < sides.size() && sides[j].a == sides[i].a && sides[j].b == sides[i].b) ++j;
    const std::size_t count = j - i;
    if (count > 2) throw MeshError("non-conforming: edge shared by more than two triangles");
    if (count == 2 && sides[i].forward == sides[i + 1].forward) {
      throw MeshError("non-conforming: edge traversed twice in the same direction");
    }
    const int e = static_cast<int>(m.edges_.size());
    Edge edge;
    edge.v = {sides[i].a, sides[i].b};
    for (std::size_t k = 0; k < count; ++k) {
      edge.tri[k] = sides[i + k].tri;
      edge.local[k] = sides[i + k].local;
      m.tri_edges_[sides[i + k].tri][sides[i + k].local] = e;
      m.tri_edges_sign_[sides[i + k].tri][sides[i + k].local] = k == 0 ? 1 : -1;
    }
    if (count == 1) {
      m.vertex_boundary_[edge.v[0]] = 1;
      m.vertex_boundary_[edge.v[1]] = 1;
    }
    m.edges_.push_back(edge);
    i = j;
  }

  m.vertices_ = std::move(vertices);
  m.triangles_ = std::move(triangles);
  m.refinement_edge_ = std::move(refinement_edge);
  m.generation_ = std::move(generation);
  return m;
}

TriangleGeometry Mesh::geometry(int t) const {
  const Triangle& tr = triangles_[t];
  return TriangleGeometry(vertices_[tr[0]], vertices_[tr[1]], vertices_[tr[2]]);
}

EdgeFrame Mesh::edge_frame(int e) const {
  const Edge& edge = edges_[e];
  const Triangle& tr = triangles_[edge.tri[0]];
  const int i = edge.local[0];
  EdgeFrame f;
  f.a = vertices_[tr[(i + 1) % 3]];
  f.b = vertices_[tr[(i + 2) % 3]];
  const Vec2 d = f.b - f.a;
  f.h = norm(d);
  f.tau = d / f.h;
  f.n = Vec2{f.tau.y, -f.tau.x};
  f.plus_triangle = edge.tri[0];
  f.minus_triangle = edge.tri[1];
  return f;
}

int Mesh::num_boundary_edges() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.boundary(); }));
}

std::vector<std::vector<int>> Mesh::vertex_patches() const {
  std::vector<std::vector<int>> patches(vertices_.size());
  for (int t = 0; t < num_triangles(); ++t) {
    for (int v : triangles_[t]) patches[v].push_back(t);
  }
  return patches;
}

Mesh refine_uniform(const Mesh& mesh) {
  std::vector<Point> verts = mesh.vertices();
  const int nv = mesh.num_vertices();
  for (const Edge& e : mesh.edges()) {
    verts.push_back((mesh.vertex(e.v[0]) + mesh.vertex(e.v[1])) * 0.5);
  }
  std::vector<Triangle> tris;
  std::vector<std::uint8_t> ref;
  std::vector<int> gen;
  tris.reserve(4 * mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Triangle& v = mesh.triangle(t);
    const int m0 = nv + mesh.triangle_edge(t, 0);
    const int m1 = nv + mesh.triangle_edge(t, 1);
    const int m2 = nv + mesh.triangle_edge(t, 2);
    tris.push_back({v[0], m2, m1});
    tris.push_back({m2, v[1], m0});
    tris.push_back({m1, m0, v[2]});
    tris.push_back({m0, m1, m2});
    // Every child has its local sides parallel to the parent's, so the marked side carries over.
    for (int k = 0; k < 4; ++k) {
      ref.push_back(static_cast<std::uint8_t>(mesh.refinement_edge(t)));
      gen.push_back(mesh.generation(t) + 2);
    }
  }
  return Mesh::build(std::move(verts), std::move(tris), std::move(ref), std::move(gen));
}

Mesh refine_nvb(const Mesh& mesh, std::span<const int> marked) {
  const int nt = mesh.num_triangles();
  std::vector<std::uint8_t> edge_marked(mesh.num_edges(), 0);
  std::vector<int> queue;
  for (int t : marked) {
    if (t < 0 || t >= nt) throw MeshError("marked triangle index out of range");
    const int e = mesh.triangle_edge(t, mesh.refinement_edge(t));
    if (!edge_marked[e]) {
      edge_marked[e] = 1;
      queue.push_back(e);
    }
  }
  // Closure: a triangle with any marked side must also have its refinement side marked.
  while (!queue.empty()) {
    const int e = queue.back();
    queue.pop_back();
    for (int k = 0; k < 2; ++k) {
      const int t = mesh.edge(e).tri[k];
      if (t < 0) continue;
      const int r = mesh.triangle_edge(t, mesh.refinement_edge(t));
      if (!edge_marked[r]) {
        edge_marked[r] = 1;
        queue.push_back(r);
      }
    }
  }

  std::vector<Point> verts = mesh.vertices();
  std::unordered_map<std::uint64_t, int> midpoint;
  std::unordered_map<std::uint64_t, std::uint8_t> split;  // sides that must be bisected
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (edge_marked[e]) split[pair_key(mesh.edge(e).v[0], mesh.edge(e).v[1])] = 1;
  }

  std::vector<Triangle> tris;
  std::vector<std::uint8_t> ref;
  std::vector<int> gen;
  tris.reserve(nt + 2 * split.size());

  // Triangles are stored rotated so that the refinement side is opposite local vertex 0.
  std::function<void(const Triangle&, int)> bisect = [&](const Triangle& tr, int g) {
    const int p = tr[0], a = tr[1], b = tr[2];
    const std::uint64_t key = pair_key(a, b);
    if (!split.count(key)) {
      tris.push_back(tr);
      ref.push_back(0);
      gen.push_back(g);
      return;
    }
    auto [it, inserted] = midpoint.try_emplace(key, static_cast<int>(verts.size()));
    if (inserted) verts.push_back((verts[a] + verts[b]) * 0.5);
    const int m = it->second;
    bisect({m, p, a}, g + 1);
    bisect({m, b, p}, g + 1);
  };

  for (int t = 0; t < nt; ++t) {
    const Triangle& v = mesh.triangle(t);
    const int r = mesh.refinement_edge(t);
    if (!edge_marked[mesh.triangle_edge(t, r)]) {
      tris.push_back(v);
      ref.push_back(static_cast<std::uint8_t>(r));
      gen.push_back(mesh.generation(t));
      continue;
    }
    bisect({v[r], v[(r + 1) % 3], v[(r + 2) % 3]}, mesh.generation(t));
  }
  return Mesh::build(std::move(verts), std::move(tris), std::move(ref), std::move(gen));
}

}  // namespace plategoal
