// Batch driver: uniform or adaptive studies of the clamped-plate goal estimators.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "plategoal/adaptivity.hpp"
#include "plategoal/benchmarks.hpp"
#include "plategoal/mesh_io.hpp"
#include "plategoal/report.hpp"
#include "plategoal/simd.hpp"

namespace pg = plategoal;

int main(int argc, char** argv) {
  CLI::App app{"Goal-oriented adaptive C0 interior penalty solver for the clamped plate"};

  std::string problem_id;
  std::string mode = "adaptive";
  std::optional<int> levels;
  std::string out = ".";
  std::string solver = "direct";
  std::optional<double> stop_tol;
  bool emit_meshes = false;
  bool timing = false;
  bool quiet = false;
  pg::AdaptiveConfig cfg;

  app.add_option("--problem", problem_id, "example_1 or example_2")->required();
  app.add_option("--mode", mode, "uniform or adaptive")
      ->check(CLI::IsMember({"uniform", "adaptive"}))
      ->capture_default_str();
  app.add_option("--theta", cfg.theta, "Doerfler bulk parameter in (0,1)")->capture_default_str();
  app.add_option("--levels", levels, "last level J (default 13 adaptive, 5 uniform)");
  app.add_option("--sigma", cfg.sigma, "interior penalty parameter")->capture_default_str();
  app.add_option("--tol", cfg.solver.rel_tol, "relative residual tolerance of the linear solver")
      ->capture_default_str();
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_flag("--emit-meshes", emit_meshes, "write mesh_level_XX.txt for every level");
  app.add_option("--solver", solver, "direct or cg")
      ->check(CLI::IsMember({"direct", "cg"}))
      ->capture_default_str();
  app.add_option("--stop-tol", stop_tol, "stop once eta_abs falls below this value");
  app.add_flag("--full-bound", cfg.full_bound, "use the load-defect form of the nonconformity term");
  app.add_flag("--timing", timing, "fill the seconds column (makes the CSV run-dependent)");
  app.add_flag("-q,--quiet", quiet, "no per-level progress lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  cfg.mode = mode == "uniform" ? pg::RefinementMode::uniform : pg::RefinementMode::adaptive;
  cfg.levels = levels.value_or(cfg.mode == pg::RefinementMode::uniform ? 5 : 13);
  cfg.solver.kind = solver == "cg" ? pg::SolverKind::cg : pg::SolverKind::direct;
  cfg.tolerance = stop_tol;

  pg::Problem problem;
  try {
    cfg.validate();
    problem = pg::make_problem(problem_id);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    std::filesystem::create_directories(out);
    if (!quiet) {
      std::printf("problem %s, mode %s, J = %d, kernels %s\n", problem.id.c_str(), mode.c_str(), cfg.levels,
                  pg::simd::isa_name(pg::simd::active().isa));
    }
    auto last = std::chrono::steady_clock::now();
    const auto records = pg::run_adaptive(problem, cfg, [&](const pg::LevelRecord& r, const pg::Mesh& mesh) {
      if (emit_meshes) {
        char name[32];
        std::snprintf(name, sizeof name, "mesh_level_%02d.txt", r.level);
        pg::write_mesh((std::filesystem::path(out) / name).string(), mesh);
      }
      if (!quiet) {
        const auto now = std::chrono::steady_clock::now();
        std::printf("level %2d  ndof %7d  Q_h %.10g  e_goal %.3e  eta_abs %.3e  eta_res %.3e  (%.2fs)\n", r.level,
                    r.ndof, r.report.q_h, r.report.e_goal.value_or(0.0), r.report.eta_abs, r.report.eta_res,
                    std::chrono::duration<double>(now - last).count());
        std::fflush(stdout);
        last = now;
      }
    });
    pg::write_outputs(out, records, timing);
  } catch (const pg::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
