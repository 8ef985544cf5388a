#include "plategoal/p2.hpp"

#include <stdexcept>

namespace plategoal {

std::array<double, 6> p2_basis(const Bary& l) {
  return {l[0] * (2.0 * l[0] - 1.0), l[1] * (2.0 * l[1] - 1.0), l[2] * (2.0 * l[2] - 1.0),
          4.0 * l[1] * l[2],         4.0 * l[2] * l[0],         4.0 * l[0] * l[1]};
}

std::array<Vec2, 6> p2_basis_gradients(const TriangleGeometry& g, const Bary& l) {
  std::array<Vec2, 6> d;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    d[i] = g.grad[i] * (4.0 * l[i] - 1.0);
    d[3 + i] = (g.grad[j] * l[k] + g.grad[k] * l[j]) * 4.0;
  }
  return d;
}

std::array<Sym2, 6> p2_basis_hessians(const TriangleGeometry& g) {
  std::array<Sym2, 6> h;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    h[i] = Sym2::sym_outer(g.grad[i], g.grad[i]) * 4.0;
    h[3 + i] = Sym2::sym_outer(g.grad[j], g.grad[k]) * 8.0;
  }
  return h;
}

P2Eval eval_p2(const TriangleGeometry& g, const P2Local& dofs, const Bary& l, int order) {
  if (order < 0 || order > 2) throw std::invalid_argument("eval_p2: derivative order must be 0, 1 or 2");
  P2Eval r;
  const auto phi = p2_basis(l);
  for (int k = 0; k < 6; ++k) r.value += dofs[k] * phi[k];
  if (order >= 1) {
    const auto d = p2_basis_gradients(g, l);
    for (int k = 0; k < 6; ++k) r.gradient += d[k] * dofs[k];
  }
  if (order == 2) {
    const auto h = p2_basis_hessians(g);
    for (int k = 0; k < 6; ++k) r.hessian += h[k] * dofs[k];
  }
  return r;
}

P2DofMap::P2DofMap(const Mesh& mesh) {
  const int nv = mesh.num_vertices();
  dofs_.resize(mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Triangle& tr = mesh.triangle(t);
    for (int i = 0; i < 3; ++i) {
      dofs_[t][i] = tr[i];
      dofs_[t][3 + i] = nv + mesh.triangle_edge(t, i);
    }
  }
  free_index_.assign(nv + mesh.num_edges(), -1);
  for (int v = 0; v < nv; ++v) {
    if (!mesh.boundary_vertex(v)) {
      free_index_[v] = num_free_++;
      free_dofs_.push_back(v);
    }
  }
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.boundary_edge(e)) {
      free_index_[nv + e] = num_free_++;
      free_dofs_.push_back(nv + e);
    }
  }
}

std::vector<double> P2DofMap::expand(const std::vector<double>& free_values) const {
  if (static_cast<int>(free_values.size()) != num_free_) {
    throw std::invalid_argument("P2DofMap::expand: size mismatch");
  }
  std::vector<double> full(num_dofs(), 0.0);
  for (int i = 0; i < num_free_; ++i) full[free_dofs_[i]] = free_values[i];
  return full;
}

std::vector<double> P2DofMap::restrict_to_free(const std::vector<double>& full) const {
  std::vector<double> r(num_free_);
  for (int i = 0; i < num_free_; ++i) r[i] = full[free_dofs_[i]];
  return r;
}

P2Local P2DofMap::local(const std::vector<double>& full, int t) const {
  P2Local c;
  for (int k = 0; k < 6; ++k) c[k] = full[dofs_[t][k]];
  return c;
}

std::vector<double> p2_interpolate(const Mesh& mesh, const std::function<double(Point)>& f) {
  std::vector<double> c(mesh.num_vertices() + mesh.num_edges());
  for (int v = 0; v < mesh.num_vertices(); ++v) c[v] = f(mesh.vertex(v));
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& ed = mesh.edge(e);
    c[mesh.num_vertices() + e] = f((mesh.vertex(ed.v[0]) + mesh.vertex(ed.v[1])) * 0.5);
  }
  return c;
}

}  // namespace plategoal
