#pragma once

#include <vector>

#include "plategoal/hhj.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/p2.hpp"

namespace plategoal {

/// Equilibrated moment tensor of an interior-penalty P2 solution u (full coefficient vector):
///   edge nn-trace      {{D2u_nn}} - sigma/h_e [[du/dn]],
///   interior moments   int_K s:q = int_K D2u:q - sum_e gamma_e int_e [[du/dn]] q_nn,
/// with gamma_e = 1/2 on interior and 1 on boundary edges.
MomentTensor build_equilibrated_tensor(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u,
                                       double sigma);

/// <div div s, phi_i> = sum_K int_K s : D2phi_i - sum_e int_e s_nn [[dphi_i/dn]] for every P2 DOF.
/// `magnitude`, when given, receives the sum of absolute element and edge contributions per DOF.
std::vector<double> divdiv_pairing(const Mesh& mesh, const P2DofMap& dofs, const MomentTensor& s,
                                   std::vector<double>* magnitude = nullptr);

/// max over free DOFs of |<div div s, phi_i> - F_i|, divided by the max over free DOFs of
/// |F_i| plus the summed |contributions| to <div div s, phi_i> (unscaled when all vanish).
/// Scaling by the size of the cancelling terms keeps the value clear of the rounding floor of
/// the linear solve on fine meshes.
double verify_equilibrium(const Mesh& mesh, const P2DofMap& dofs, const MomentTensor& s,
                          const std::vector<double>& load);

/// Largest two-sided difference of the nn-trace over interior-edge quadrature points.
double nn_trace_mismatch(const Mesh& mesh, const MomentTensor& s);

struct ElementNorm {
  double total = 0.0;
  std::vector<double> element_sq;
};

/// ||s - D2u||, P2 u, with per-element squared contributions.
ElementNorm tensor_minus_hessian_norm(const Mesh& mesh, const P2DofMap& dofs, const MomentTensor& s,
                                      const std::vector<double>& u);

}  // namespace plategoal
