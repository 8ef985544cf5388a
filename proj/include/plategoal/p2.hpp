#pragma once

#include <array>
#include <functional>
#include <vector>

#include "plategoal/geometry.hpp"
#include "plategoal/mesh.hpp"

namespace plategoal {

// Local P2 ordering: vertex values 0..2, then midpoints of local sides 0..2
// (side i is opposite vertex i).

using P2Local = std::array<double, 6>;

std::array<double, 6> p2_basis(const Bary& l);
std::array<Vec2, 6> p2_basis_gradients(const TriangleGeometry& g, const Bary& l);
/// Hessians are constant on the element.
std::array<Sym2, 6> p2_basis_hessians(const TriangleGeometry& g);

struct P2Eval {
  double value = 0.0;
  Vec2 gradient;
  Sym2 hessian;
};

/// Evaluates a local P2 polynomial up to the requested derivative order (0, 1 or 2).
P2Eval eval_p2(const TriangleGeometry& g, const P2Local& dofs, const Bary& l, int order);

/// Global P2 numbering: vertices first, then one midpoint per edge. Everything on the boundary is
/// constrained to zero.
class P2DofMap {
 public:
  explicit P2DofMap(const Mesh& mesh);

  int num_dofs() const { return static_cast<int>(free_index_.size()); }
  int num_free() const { return num_free_; }
  int dof(int t, int k) const { return dofs_[t][k]; }
  const std::array<int, 6>& dofs(int t) const { return dofs_[t]; }
  /// Position in the free-DOF vector, -1 when constrained.
  int free_index(int dof) const { return free_index_[dof]; }
  bool constrained(int dof) const { return free_index_[dof] < 0; }
  const std::vector<int>& free_dofs() const { return free_dofs_; }

  /// Full coefficient vector (constrained entries zero) from a free-DOF vector.
  std::vector<double> expand(const std::vector<double>& free_values) const;
  std::vector<double> restrict_to_free(const std::vector<double>& full) const;

  P2Local local(const std::vector<double>& full, int t) const;

 private:
  std::vector<std::array<int, 6>> dofs_;
  std::vector<int> free_index_;
  std::vector<int> free_dofs_;
  int num_free_ = 0;
};

/// Nodal interpolant (vertex and midpoint values) as a full coefficient vector.
std::vector<double> p2_interpolate(const Mesh& mesh, const std::function<double(Point)>& f);

}  // namespace plategoal
