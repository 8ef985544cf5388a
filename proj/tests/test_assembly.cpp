#include <doctest.h>

#include <numbers>
#include <random>

#include "plategoal/assembly.hpp"
#include "plategoal/benchmarks.hpp"
#include "plategoal/density.hpp"
#include "plategoal/quadrature.hpp"
#include "plategoal/regions.hpp"
#include "plategoal/sparse.hpp"

using namespace plategoal;

namespace {

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// sum_K ||D2 v||_K^2 of a P2 field (hessians are constant per element).
double broken_hessian_sq(const Mesh& m, const P2DofMap& dofs, const std::vector<double>& v) {
  double s = 0.0;
  for (int t = 0; t < m.num_triangles(); ++t) {
    const TriangleGeometry g = m.geometry(t);
    const Sym2 h = eval_p2(g, dofs.local(v, t), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).hessian;
    s += ddot(h, h) * g.area;
  }
  return s;
}

}  // namespace

TEST_CASE("stiffness matrix") {
  const Mesh m = unit_square_mesh();
  const Mesh m1 = refine_uniform(m);
  SUBCASE("symmetry") {
    for (const Mesh* mesh : {&m1}) {
      const P2DofMap dofs(*mesh);
      const SparseSpdMatrix A = assemble_aip(*mesh, dofs, 20.0);
      CHECK(A.max_asymmetry() < 1e-12 * A.max_abs());
    }
    const Mesh m2 = refine_uniform(m1);
    const P2DofMap d2(m2);
    const SparseSpdMatrix A2 = assemble_aip(m2, d2, 20.0);
    CHECK(A2.max_asymmetry() < 1e-12 * A2.max_abs());
  }
  SUBCASE("coercive on T_1 with sigma 20") {
    const P2DofMap dofs(m1);
    const SparseSpdMatrix A = assemble_aip(m1, dofs, 20.0);
    // Inverse power iteration with the dense oracle gives the smallest eigenvalue.
    std::vector<double> x(A.size(), 1.0);
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
      const double nx = norm2(x);
      for (double& v : x) v /= nx;
      std::vector<double> y = dense_solve(A, x);
      double xy = 0.0;
      for (int i = 0; i < A.size(); ++i) xy += x[i] * y[i];
      lambda = 1.0 / xy;
      x = y;
    }
    CHECK(lambda > 0.0);
  }
  SUBCASE("nonpositive penalty") {
    const P2DofMap dofs(m1);
    CHECK_THROWS_AS(assemble_aip(m1, dofs, 0.0), std::invalid_argument);
  }
}

TEST_CASE("consistency on a C1 quadratic") {
  // No interior jumps: a_IP(v, v) reduces to the broken hessian plus the boundary-edge terms.
  const Mesh m = refine_uniform(refine_uniform(unit_square_mesh()));
  const P2DofMap dofs(m);
  auto q = [](Point p) { return 1.0 + p.x - 2 * p.y + 0.5 * p.x * p.x + p.x * p.y - 3 * p.y * p.y; };
  const auto v = p2_interpolate(m, q);
  double interior_jump = 0.0, boundary = 0.0;
  const EdgeRule& r = edge_rule(4);
  for (int e = 0; e < m.num_edges(); ++e) {
    const double h = edge_frame(m, e).h;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const EdgeTrace tr = p2_edge_trace(m, dofs, v, e, r.points[k]);
      if (m.boundary_edge(e)) {
        boundary += r.weights[k] * h * (-2.0 * tr.jump_dn * tr.avg_hnn + 20.0 / h * tr.jump_dn * tr.jump_dn);
      } else {
        interior_jump = std::max(interior_jump, std::abs(tr.jump_dn));
      }
    }
  }
  CHECK(interior_jump < 1e-12);
  CHECK(broken_hessian_sq(m, dofs, v) == doctest::Approx(39.0).epsilon(1e-12));
  CHECK(aip_form(m, dofs, v, v, 20.0) == doctest::Approx(39.0 + boundary).epsilon(1e-12));
}

TEST_CASE("ip norm") {
  const Mesh m = refine_uniform(unit_square_mesh());
  const P2DofMap dofs(m);
  CHECK(ip_norm(m, dofs, std::vector<double>(dofs.num_dofs(), 0.0), 20.0) == 0.0);

  // A quadratic with zero trace and zero normal derivative cannot exist on the square, so the
  // no-jump identity is checked against the broken hessian plus the boundary penalty by hand.
  auto q = [](Point p) { return p.x * (1 - p.x); };
  const auto v = p2_interpolate(m, q);
  const double ip2 = std::pow(ip_norm(m, dofs, v, 20.0), 2);
  CHECK(ip2 == doctest::Approx(broken_hessian_sq(m, dofs, v) + jump_penalty_sq(m, dofs, v, 20.0)).epsilon(1e-12));
  CHECK(broken_hessian_sq(m, dofs, v) == doctest::Approx(4.0).epsilon(1e-12));

  // Interpolation error of sin(pi x) sin(pi y) decreases under refinement.
  auto f = [](Point p) { return std::sin(std::numbers::pi * p.x) * std::sin(std::numbers::pi * p.y); };
  double previous = 1e300;
  Mesh mk = refine_uniform(m);
  for (int k = 2; k <= 4; ++k) {
    const P2DofMap dk(mk);
    const auto vk = p2_interpolate(mk, f);
    // ||D2(u - v)|| by element quadrature with the exact hessian.
    double err = 0.0;
    for (int t = 0; t < mk.num_triangles(); ++t) {
      const TriangleGeometry g = mk.geometry(t);
      const Sym2 h = eval_p2(g, dk.local(vk, t), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).hessian;
      err += integrate(g, triangle_rule(8), [&](Point p) {
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const double s = std::sin(std::numbers::pi * p.x), c = std::cos(std::numbers::pi * p.x);
        const double sy = std::sin(std::numbers::pi * p.y), cy = std::cos(std::numbers::pi * p.y);
        const Sym2 d = Sym2{-pi2 * s * sy, pi2 * c * cy, -pi2 * s * sy} - h;
        return ddot(d, d);
      });
    }
    // Jumps of u - v: the exact u only contributes its normal derivative on the boundary.
    const EdgeRule& r = edge_rule(6);
    for (int e = 0; e < mk.num_edges(); ++e) {
      const EdgeFrame fr = edge_frame(mk, e);
      for (std::size_t k = 0; k < r.size(); ++k) {
        const Point x = fr.a + (fr.b - fr.a) * r.points[k];
        const double pi = std::numbers::pi;
        const Vec2 gu{pi * std::cos(pi * x.x) * std::sin(pi * x.y), pi * std::sin(pi * x.x) * std::cos(pi * x.y)};
        const double exact = mk.boundary_edge(e) ? dot(gu, fr.n) : 0.0;
        const double j = exact - p2_edge_trace(mk, dk, vk, e, r.points[k]).jump_dn;
        err += 20.0 * r.weights[k] * j * j;
      }
    }
    err = std::sqrt(err);
    CHECK(err < previous);
    previous = err;
    mk = refine_uniform(mk);
  }
}

TEST_CASE("load vectors") {
  const Mesh m = refine_uniform(unit_square_mesh());
  const P2DofMap dofs(m);
  QuadraturePlan plan;
  SUBCASE("zero load") {
    const auto b = assemble_load(m, dofs, ZeroDensity{});
    CHECK(b == std::vector<double>(dofs.num_dofs(), 0.0));
  }
  SUBCASE("unit load sums to the area") {
    const FieldDensity one([](Point) { return 1.0; }, plan);
    CHECK(sum(assemble_load(m, dofs, one)) == doctest::Approx(1.0).epsilon(1e-14));
    const Mesh l = refine_uniform(l_shape_mesh());
    const P2DofMap dl(l);
    CHECK(sum(assemble_load(l, dl, one)) == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("normalised goal weights sum to one") {
    const GoalWeight strip = GoalWeight::strip(0.75, 1.25, example1::kStripArea, true);
    CHECK(sum(assemble_load(m, dofs, strip)) == doctest::Approx(1.0).epsilon(1e-13));
    const Mesh l = refine_uniform(refine_uniform(l_shape_mesh()));
    const P2DofMap dl(l);
    const GoalWeight disk = GoalWeight::disk({0, 0}, example2::kRadius, example2::kDiskArea, true);
    CHECK(sum(assemble_load(l, dl, disk)) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("linear solves") {
  SUBCASE("zero right-hand side") {
    const SparseSpdMatrix I = SparseSpdMatrix::identity(7);
    CHECK(solve(I, std::vector<double>(7, 0.0)) == std::vector<double>(7, 0.0));
  }
  SUBCASE("identity") {
    const SparseSpdMatrix I = SparseSpdMatrix::identity(5);
    const std::vector<double> b{1, -2, 3.5, 0, 7};
    const auto x = solve(I, b);
    for (int i = 0; i < 5; ++i) CHECK(x[i] == doctest::Approx(b[i]).epsilon(1e-14));
  }
  SUBCASE("random SPD against the dense oracle") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 50;
    std::vector<double> M(n * n);
    for (double& v : M) v = u(rng);
    std::vector<Triplet> trip;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = i == j ? 1.0 : 0.0;
        for (int k = 0; k < n; ++k) s += M[k * n + i] * M[k * n + j];
        trip.push_back({i, j, s});
      }
    }
    const SparseSpdMatrix A = SparseSpdMatrix::from_triplets(n, trip);
    std::vector<double> b(n);
    for (double& v : b) v = u(rng);
    const auto ref = dense_solve(A, b);
    for (SolverKind kind : {SolverKind::direct, SolverKind::cg}) {
      SolverOptions opt;
      opt.kind = kind;
      SolveStats st;
      const auto x = SpdSolver(A, opt).solve(b, &st);
      CHECK(st.relative_residual <= 1e-10);
      for (int i = 0; i < n; ++i) CHECK(std::abs(x[i] - ref[i]) < 1e-8);
    }
  }
  SUBCASE("indefinite matrix is reported") {
    const SparseSpdMatrix A = SparseSpdMatrix::from_triplets(2, {{0, 0, 1.0}, {1, 1, -1.0}});
    SolverOptions opt;
    opt.kind = SolverKind::cg;
    opt.max_iterations = 10;
    CHECK_THROWS_AS(SpdSolver(A, opt).solve({1.0, 1.0}), SolverError);
  }
}

TEST_CASE("Galerkin system on the first benchmark") {
  const Problem p = make_problem("example_1");
  const Mesh m = refine_uniform(refine_uniform(p.initial_mesh));
  const P2DofMap dofs(m);
  const SparseSpdMatrix A = assemble_aip(m, dofs, 20.0);
  const auto F = dofs.restrict_to_free(assemble_load(m, dofs, *p.load));
  const auto U = solve(A, F);
  CHECK(relative_residual(A, U, F) < 1e-9);
  // Linearity in the load.
  std::vector<double> F3 = F;
  for (double& v : F3) v *= 3.0;
  const auto U3 = solve(A, F3);
  for (std::size_t i = 0; i < U.size(); ++i) CHECK(std::abs(U3[i] - 3.0 * U[i]) < 1e-12 * (1 + std::abs(U3[i])));
  // a_IP(u, v) through the matrix matches the form evaluator.
  const auto u = dofs.expand(U);
  double uAu = 0.0;
  const auto AU = A * U;
  for (std::size_t i = 0; i < U.size(); ++i) uAu += U[i] * AU[i];
  CHECK(aip_form(m, dofs, u, u, 20.0) == doctest::Approx(uAu).epsilon(1e-12));
}
