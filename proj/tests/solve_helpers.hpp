#pragma once

#include <random>

#include "plategoal/assembly.hpp"
#include "plategoal/benchmarks.hpp"
#include "plategoal/p2.hpp"
#include "plategoal/sparse.hpp"

namespace plategoal::testing {

/// Primal and dual discrete solutions of a benchmark on a given mesh (full coefficient vectors).
struct Solved {
  Mesh mesh;
  P2DofMap dofs;
  std::vector<double> F, Ft, U, Ut;
};

inline Solved solve_problem(const Problem& p, const Mesh& mesh, double sigma = 20.0) {
  Solved s{mesh, P2DofMap(mesh), {}, {}, {}, {}};
  const SparseSpdMatrix A = assemble_aip(s.mesh, s.dofs, sigma);
  s.F = assemble_load(s.mesh, s.dofs, *p.load);
  s.Ft = assemble_load(s.mesh, s.dofs, *p.goal);
  const SpdSolver solver(A);
  s.U = s.dofs.expand(solver.solve(s.dofs.restrict_to_free(s.F)));
  s.Ut = s.dofs.expand(solver.solve(s.dofs.restrict_to_free(s.Ft)));
  return s;
}

/// Random P2 field with zero boundary values.
inline std::vector<double> random_p2(const P2DofMap& dofs, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(dofs.num_free());
  for (double& x : v) x = u(rng);
  return dofs.expand(v);
}

inline Mesh refined(const Mesh& m, int times) {
  Mesh r = m;
  for (int k = 0; k < times; ++k) r = refine_uniform(r);
  return r;
}

}  // namespace plategoal::testing
