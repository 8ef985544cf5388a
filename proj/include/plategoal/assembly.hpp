#pragma once

#include <vector>

#include "plategoal/density.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/p2.hpp"
#include "plategoal/sparse.hpp"

namespace plategoal {

inline constexpr double kDefaultPenalty = 20.0;

/// Interior-penalty bilinear form on the free P2 DOFs:
///   sum_K (D2u, D2v)_K - sum_e ([[du/dn]], {{D2v_nn}})_e - sum_e ({{D2u_nn}}, [[dv/dn]])_e
///   + sum_e sigma/h_e ([[du/dn]], [[dv/dn]])_e,
/// with jumps and averages reduced to traces on boundary edges.
SparseSpdMatrix assemble_aip(const Mesh& mesh, const P2DofMap& dofs, double sigma);

/// (f, phi_i) for every P2 DOF, constrained ones included.
std::vector<double> assemble_load(const Mesh& mesh, const P2DofMap& dofs, const Density& f);

/// a_IP(u, v) for full coefficient vectors (constrained entries are used as given).
double aip_form(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u,
                const std::vector<double>& v, double sigma);

/// One-sided normal derivative jump and average nn-hessian of a P2 field at edge parameter s
/// (s in [0,1] along tau).
struct EdgeTrace {
  double jump_dn = 0.0;
  double avg_hnn = 0.0;
};
EdgeTrace p2_edge_trace(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u, int e, double s);

/// sum_e sigma/h_e ||[[du/dn]]||_e^2
double jump_penalty_sq(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u, double sigma);

/// ||u||_IP for a P2 field.
double ip_norm(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u, double sigma);

}  // namespace plategoal
