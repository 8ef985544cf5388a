#pragma once

#include <array>
#include <vector>

#include "plategoal/geometry.hpp"
#include "plategoal/mesh.hpp"

namespace plategoal {

// Degree-1 Hellan-Herrmann-Johnson element (P1 symmetric tensors, single-valued nn-trace).
// Local DOF order (9):
//   2j, 2j+1 : (1/h) int_e sigma_nn psi_a, side j, psi_0 = 1 - s, psi_1 = s, with s running
//              from local vertex j+1 to local vertex j+2;
//   6, 7, 8  : (1/|K|) int_K sigma : E for E = E_xx, E_yy, E_xy (off-diagonal ones).

using HhjLocal = std::array<double, 9>;

/// Maps local DOFs to the tensor values at the three vertices (the field is linear).
class HhjElement {
 public:
  explicit HhjElement(const TriangleGeometry& g);

  std::array<Sym2, 3> vertex_values(const HhjLocal& dofs) const;
  /// DOFs of a P1 tensor field given by its vertex values.
  HhjLocal dofs_of(const std::array<Sym2, 3>& vertex_values) const;
  double condition_number() const { return cond_; }

 private:
  TriangleGeometry g_;
  std::array<std::array<double, 9>, 9> dof_matrix_{};  // [dof][basis]
  std::array<std::array<double, 9>, 9> inverse_{};     // [basis][dof]
  double cond_ = 0.0;
};

Sym2 eval_hhj(const TriangleGeometry& g, const HhjLocal& dofs, const Bary& l);
inline Sym2 eval_p1_tensor(const std::array<Sym2, 3>& v, const Bary& l) {
  return v[0] * l[0] + v[1] * l[1] + v[2] * l[2];
}

/// Global HHJ field: two moments per edge (s running from the lower to the higher global
/// vertex index) and three interior moments per triangle; vertex values cached per triangle.
class MomentTensor {
 public:
  MomentTensor() = default;
  MomentTensor(const Mesh& mesh, std::vector<double> edge_dofs, std::vector<double> cell_dofs);

  const std::vector<double>& edge_dofs() const { return edge_dofs_; }
  const std::vector<double>& cell_dofs() const { return cell_dofs_; }
  HhjLocal local(int t) const { return local_[t]; }
  const std::array<Sym2, 3>& vertex_values(int t) const { return values_[t]; }
  Sym2 eval(int t, const Bary& l) const { return eval_p1_tensor(values_[t], l); }
  int num_triangles() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> edge_dofs_;
  std::vector<double> cell_dofs_;
  std::vector<HhjLocal> local_;
  std::vector<std::array<Sym2, 3>> values_;
};

/// Moments (1/h) int_e g psi_a of a linear edge function with end values g_start, g_end.
inline std::array<double, 2> linear_edge_moments(double g_start, double g_end) {
  return {g_start / 3.0 + g_end / 6.0, g_start / 6.0 + g_end / 3.0};
}

}  // namespace plategoal
