#include "plategoal/adaptivity.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "plategoal/assembly.hpp"
#include "plategoal/equilibration.hpp"
#include "plategoal/reconstruction.hpp"

namespace plategoal {

std::vector<int> dorfler_mark(std::span<const double> eta_sq, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("Doerfler parameter must lie in (0, 1)");
  double total = 0.0;
  for (double v : eta_sq) {
    if (!(v >= 0.0)) throw std::invalid_argument("Doerfler indicators must be non-negative");
    total += v;
  }
  std::vector<int> order(eta_sq.size());
  std::iota(order.begin(), order.end(), 0);
  if (total == 0.0) return {};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return eta_sq[a] > eta_sq[b]; });
  std::vector<int> marked;
  double acc = 0.0;
  for (int k : order) {
    if (acc >= theta * total) break;
    marked.push_back(k);
    acc += eta_sq[k];
  }
  std::sort(marked.begin(), marked.end());
  return marked;
}

bool dorfler_satisfied(std::span<const double> eta_sq, std::span<const int> marked, double theta) {
  double total = 0.0, sel = 0.0;
  for (double v : eta_sq) total += v;
  for (int k : marked) sel += eta_sq[k];
  return theta * total <= sel;
}

void AdaptiveConfig::validate() const {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0, 1)");
  if (levels < 1) throw std::invalid_argument("the number of levels J must be at least 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (!(solver.rel_tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
}

std::vector<int> mark_level(const GoalReport& r, double theta, bool* all_satisfied) {
  std::vector<double> nc_sq(r.eta_nc_k.size());
  for (std::size_t k = 0; k < nc_sq.size(); ++k) nc_sq[k] = r.eta_nc_k[k] * r.eta_nc_k[k];
  const std::vector<int> mp = dorfler_mark(r.eta_h_k, theta);
  const std::vector<int> md = dorfler_mark(r.eta_tilde_k, theta);
  const std::vector<int> mn = dorfler_mark(nc_sq, theta);
  if (all_satisfied) {
    auto ok = [&](const std::vector<double>& v, const std::vector<int>& m) {
      const bool zero = std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
      return zero || dorfler_satisfied(v, m, theta);
    };
    *all_satisfied = ok(r.eta_h_k, mp) && ok(r.eta_tilde_k, md) && ok(nc_sq, mn);
  }
  std::vector<int> all;
  all.reserve(mp.size() + md.size() + mn.size());
  all.insert(all.end(), mp.begin(), mp.end());
  all.insert(all.end(), md.begin(), md.end());
  all.insert(all.end(), mn.begin(), mn.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

LevelRecord solve_and_estimate(const Problem& problem, const Mesh& mesh, const AdaptiveConfig& config, int level) {
  LevelRecord rec;
  rec.level = level;
  rec.ntri = mesh.num_triangles();
  const P2DofMap dofs(mesh);
  rec.ndof = dofs.num_free();

  // SOLVE: one matrix, two right-hand sides.
  const SparseSpdMatrix A = assemble_aip(mesh, dofs, config.sigma);
  const std::vector<double> F = assemble_load(mesh, dofs, *problem.load);
  const std::vector<double> Ft = assemble_load(mesh, dofs, *problem.goal);
  std::vector<double> U, Ut;
  try {
    const SpdSolver solver(A, config.solver);
    SolveStats sp, sd;
    U = dofs.expand(solver.solve(dofs.restrict_to_free(F), &sp));
    Ut = dofs.expand(solver.solve(dofs.restrict_to_free(Ft), &sd));
    rec.diag.solver_residual_primal = sp.relative_residual;
    rec.diag.solver_residual_dual = sd.relative_residual;
  } catch (const SolverError& e) {
    throw SolverError("level " + std::to_string(level) + ": " + e.what());
  }

  const MomentTensor sigma = build_equilibrated_tensor(mesh, dofs, U, config.sigma);
  const MomentTensor sigma_t = build_equilibrated_tensor(mesh, dofs, Ut, config.sigma);
  const HctFunction s = enrich(mesh, dofs, U);
  const HctFunction st = enrich(mesh, dofs, Ut);

  // ESTIMATE
  GoalReport& r = rec.report;
  r.q_uh = std::inner_product(Ft.begin(), Ft.end(), U.begin(), 0.0);
  const AverageMomentTensor sigma_m(mesh, sigma_t, st);
  r.correction = goal_correction(mesh, sigma, s, sigma_m).total;
  const ElementSums eh = hct_tensor_distance_sq(mesh, sigma, s);
  const ElementSums et = hct_tensor_distance_sq(mesh, sigma_t, st);
  r.eta_h = std::sqrt(eh.total);
  r.eta_tilde = std::sqrt(et.total);
  r.eta_h_k = eh.element;
  r.eta_tilde_k = et.element;
  const GoalTerm nc = nonconformity_goal_term(mesh, dofs, s, U, *problem.goal);
  r.q_nc_signed = nc.global;
  r.eta_nc = std::abs(nc.global);
  r.eta_nc_k = nc.element_abs;
  const ElementSums res = residual_goal_estimator(mesh, dofs, U, sigma, sigma_t);
  r.eta_res = res.total;
  r.eta_res_k = res.element;
  r.q_ref = problem.q_ref;
  finalize_report(r);

  LevelDiagnostics& d = rec.diag;
  d.equilibrium_primal = verify_equilibrium(mesh, dofs, sigma, F);
  d.equilibrium_dual = verify_equilibrium(mesh, dofs, sigma_t, Ft);
  d.nn_trace_mismatch = std::max(nn_trace_mismatch(mesh, sigma), nn_trace_mismatch(mesh, sigma_t));
  const C1Mismatch cp = c1_mismatch(mesh, s), cd = c1_mismatch(mesh, st);
  d.c1_value = std::max(cp.value, cd.value);
  d.c1_gradient = std::max(cp.gradient, cd.gradient);
  const std::vector<double> B = divdiv_pairing(mesh, dofs, sigma);
  d.eta_o = std::inner_product(F.begin(), F.end(), Ut.begin(), 0.0) -
            std::inner_product(B.begin(), B.end(), Ut.begin(), 0.0);
  d.oscillation_primal = oscillation_bound(mesh, *problem.load);
  d.oscillation_dual = oscillation_bound(mesh, *problem.goal);
  d.full_bound = 0.5 * r.eta_h * r.eta_tilde +
                 std::abs(load_pairing_defect(mesh, *problem.load, sigma, st) + r.q_nc_signed);
  if (config.full_bound) {
    r.eta_abs = d.full_bound;
    if (r.e_goal && *r.e_goal > 0.0) r.eff_abs = r.eta_abs / *r.e_goal;
  }
  return rec;
}

std::vector<LevelRecord> run_adaptive(const Problem& problem, const AdaptiveConfig& config,
                                      const std::function<void(const LevelRecord&, const Mesh&)>& on_level) {
  config.validate();
  std::vector<LevelRecord> records;
  Mesh mesh = problem.initial_mesh;
  for (int j = 0; j <= config.levels; ++j) {
    const auto start = std::chrono::steady_clock::now();
    LevelRecord rec = solve_and_estimate(problem, mesh, config, j);
    std::vector<int> marked;
    if (config.mode == RefinementMode::adaptive) {
      bool ok = true;
      marked = mark_level(rec.report, config.theta, &ok);
      rec.diag.dorfler_ok = ok;
      rec.diag.marked = static_cast<int>(marked.size());
    } else {
      rec.diag.marked = mesh.num_triangles();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    records.push_back(rec);
    if (on_level) on_level(records.back(), mesh);
    if (config.tolerance && rec.report.eta_abs < *config.tolerance) break;
    if (j == config.levels) break;
    mesh = config.mode == RefinementMode::adaptive ? refine_nvb(mesh, marked) : refine_uniform(mesh);
  }
  return records;
}

}  // namespace plategoal
