#pragma once

#include <optional>
#include <vector>

#include "plategoal/density.hpp"
#include "plategoal/hct.hpp"
#include "plategoal/hhj.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/p2.hpp"

namespace plategoal {

inline constexpr double kOscillationConstant = 0.3682146;

/// sigma_m = (sigma_eq + D2 s) / 2, evaluated per HCT sub-triangle.
class AverageMomentTensor {
 public:
  AverageMomentTensor(const Mesh& mesh, const MomentTensor& tensor, const HctFunction& s);
  Sym2 eval(int t, int sub, const Bary& l) const;
  const Mesh& mesh() const { return *mesh_; }

 private:
  const Mesh* mesh_;
  const MomentTensor* tensor_;
  std::vector<HctElement> elements_;
};

/// sum_K int_K (a - D2 s) : b with integrands evaluated on each HCT sub-triangle.
struct ElementSums {
  double total = 0.0;
  std::vector<double> element;
};

/// ||D2 s - sigma|| with per-element squares.
ElementSums hct_tensor_distance_sq(const Mesh& mesh, const MomentTensor& sigma, const HctFunction& s);

/// (sigma_eq - D2 s, sigma_m)
ElementSums goal_correction(const Mesh& mesh, const MomentTensor& sigma_eq, const HctFunction& s,
                            const AverageMomentTensor& sigma_m);

/// eta_h * eta_tilde / 2 + eta_nc; throws on negative input.
double abstract_goal_bound(double eta_h, double eta_tilde, double eta_nc);

/// sum_K int_K (sigma_eq - D2u):sigma_dual + sum_e int_e [[du/dn]] sigma_dual_nn, localised with
/// edge weights 1/2 (interior) and 1 (boundary).
ElementSums residual_goal_estimator(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u,
                                    const MomentTensor& sigma_eq, const MomentTensor& sigma_dual);

/// c (sum_K h_K^4 ||f||_K^2)^(1/2) with c = 0.3682146.
double oscillation_bound(const Mesh& mesh, const Density& f);

/// (f, s) - (sigma, D2 s): the load-oscillation pairing entering the full bound.
double load_pairing_defect(const Mesh& mesh, const Density& f, const MomentTensor& sigma, const HctFunction& s);

struct GoalReport {
  double q_uh = 0.0;
  double correction = 0.0;
  double q_h = 0.0;
  std::optional<double> q_ref;
  std::optional<double> e_goal;
  std::optional<double> signed_error;  ///< Q_ref - Q_h
  double eta_h = 0.0;
  double eta_tilde = 0.0;
  double eta_nc = 0.0;
  double q_nc_signed = 0.0;
  double eta_abs = 0.0;
  double eta_res = 0.0;
  std::optional<double> eff_abs;
  std::optional<double> eff_res;
  std::vector<double> eta_h_k;      ///< squared per element
  std::vector<double> eta_tilde_k;  ///< squared per element
  std::vector<double> eta_nc_k;     ///< |Q((s - u) chi_K)| per element
  std::vector<double> eta_res_k;    ///< signed per element
};

/// Fills the derived fields (Q_h, bounds, effectivities) from the constituents.
void finalize_report(GoalReport& r);

}  // namespace plategoal
