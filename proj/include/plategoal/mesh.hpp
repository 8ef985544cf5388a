#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plategoal/geometry.hpp"

namespace plategoal {

class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Triangle = std::array<int, 3>;

/// An edge stored as a sorted vertex pair with its one or two neighbours.
/// tri[0] is the lower triangle index (the "plus" side); tri[1] is -1 on the boundary.
struct Edge {
  std::array<int, 2> v{};
  std::array<int, 2> tri{-1, -1};
  std::array<int, 2> local{-1, -1};  ///< local side index inside tri[k]

  bool boundary() const { return tri[1] < 0; }
};

/// Normal/tangent frame of an edge. n points from plus into minus (outward on the boundary);
/// tau is n rotated by +90 degrees.
struct EdgeFrame {
  Vec2 n;
  Vec2 tau;
  double h = 0.0;
  Point a;  ///< start point, tau = (b - a) / h
  Point b;
  int plus_triangle = -1;
  int minus_triangle = -1;
};

/// Conforming triangulation. Local side i of a triangle is the side opposite local vertex i.
/// Immutable once built; refinement returns a new mesh.
class Mesh {
 public:
  Mesh() = default;

  /// Builds topology; refinement edge defaults to the longest side, generation to 0.
  static Mesh build(std::vector<Point> vertices, std::vector<Triangle> triangles);
  static Mesh build(std::vector<Point> vertices, std::vector<Triangle> triangles,
                    std::vector<std::uint8_t> refinement_edge, std::vector<int> generation);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }

  const Point& vertex(int i) const { return vertices_[i]; }
  const Triangle& triangle(int t) const { return triangles_[t]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Global edge index of the side opposite local vertex i of triangle t.
  int triangle_edge(int t, int i) const { return tri_edges_[t][i]; }
  const std::array<int, 3>& triangle_edges(int t) const { return tri_edges_[t]; }
  /// +1 when t is the plus side of its local side i (its outward normal equals n_e), else -1.
  int edge_sign(int t, int i) const { return tri_edges_sign_[t][i]; }

  bool boundary_vertex(int v) const { return vertex_boundary_[v] != 0; }
  bool boundary_edge(int e) const { return edges_[e].boundary(); }
  int refinement_edge(int t) const { return refinement_edge_[t]; }
  int generation(int t) const { return generation_[t]; }
  std::span<const std::uint8_t> refinement_edges() const { return refinement_edge_; }
  std::span<const int> generations() const { return generation_; }

  TriangleGeometry geometry(int t) const;
  EdgeFrame edge_frame(int e) const;

  /// V - E + T
  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles(); }
  int num_boundary_edges() const;
  int num_interior_edges() const { return num_edges() - num_boundary_edges(); }

  /// Triangles sharing vertex v, in ascending order.
  std::vector<std::vector<int>> vertex_patches() const;

 private:
  std::vector<Point> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<std::array<int, 3>> tri_edges_sign_;
  std::vector<std::uint8_t> vertex_boundary_;
  std::vector<std::uint8_t> refinement_edge_;
  std::vector<int> generation_;
};

inline EdgeFrame edge_frame(const Mesh& mesh, int e) { return mesh.edge_frame(e); }

/// Red refinement: every triangle split into four similar children.
Mesh refine_uniform(const Mesh& mesh);

/// Newest-vertex bisection of the marked triangles plus the closure needed for conformity.
Mesh refine_nvb(const Mesh& mesh, std::span<const int> marked);

/// Local index of the longest side of triangle t, ties resolved by the smallest opposite
/// global vertex index.
int longest_side(const std::vector<Point>& vertices, const Triangle& t);

}  // namespace plategoal
