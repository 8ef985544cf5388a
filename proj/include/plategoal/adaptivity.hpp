#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plategoal/benchmarks.hpp"
#include "plategoal/estimators.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/sparse.hpp"

namespace plategoal {

/// Greedy Doerfler marking on squared indicators: largest first (ties to the smaller index)
/// until the marked sum reaches theta times the total. Returns ascending indices; empty when
/// every indicator is zero. Throws for theta outside (0, 1) or negative entries.
std::vector<int> dorfler_mark(std::span<const double> eta_sq, double theta);

/// theta * sum(all) <= sum(marked)
bool dorfler_satisfied(std::span<const double> eta_sq, std::span<const int> marked, double theta);

enum class RefinementMode { adaptive, uniform };

struct AdaptiveConfig {
  double theta = 0.25;
  int levels = 13;  ///< J: levels 0..J are computed
  double sigma = 20.0;
  RefinementMode mode = RefinementMode::adaptive;
  SolverOptions solver;
  /// Stop early once eta_abs drops below this value.
  std::optional<double> tolerance;
  /// Replace eta_nc by the load-defect form of the bound.
  bool full_bound = false;

  void validate() const;
};

struct LevelDiagnostics {
  double equilibrium_primal = 0.0;
  double equilibrium_dual = 0.0;
  double nn_trace_mismatch = 0.0;
  double c1_value = 0.0;
  double c1_gradient = 0.0;
  double eta_o = 0.0;  ///< (f, u_dual) - <div div sigma_eq, u_dual>
  double oscillation_primal = 0.0;
  double oscillation_dual = 0.0;
  double full_bound = 0.0;  ///< eta_h eta_tilde / 2 + |(f - f_h, s_dual) + Q(s - u_h)|
  double solver_residual_primal = 0.0;
  double solver_residual_dual = 0.0;
  bool dorfler_ok = true;
  int marked = 0;
};

struct LevelRecord {
  int level = 0;
  int ntri = 0;
  int ndof = 0;  ///< free P2 unknowns
  GoalReport report;
  LevelDiagnostics diag;
  double seconds = 0.0;
};

/// Everything computed on one mesh: solve, reconstruct, estimate.
LevelRecord solve_and_estimate(const Problem& problem, const Mesh& mesh, const AdaptiveConfig& config, int level);

/// SOLVE - ESTIMATE - MARK - REFINE for levels 0..J. `on_level` sees every record and mesh as
/// soon as it is available.
std::vector<LevelRecord> run_adaptive(
    const Problem& problem, const AdaptiveConfig& config,
    const std::function<void(const LevelRecord&, const Mesh&)>& on_level = nullptr);

/// Union of the three Doerfler sets of a level.
std::vector<int> mark_level(const GoalReport& report, double theta, bool* all_satisfied = nullptr);

}  // namespace plategoal
