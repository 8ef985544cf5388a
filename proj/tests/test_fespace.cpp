#include <doctest.h>

#include <random>

#include "plategoal/benchmarks.hpp"
#include "plategoal/hct.hpp"
#include "plategoal/hhj.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/p2.hpp"
#include "plategoal/quadrature.hpp"

using namespace plategoal;

namespace {

TriangleGeometry random_triangle(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const TriangleGeometry g(a, b, c);
    if (g.area > 0.1) return g;
  }
}

// Local P2 coefficients (vertex values, then midpoints of the sides opposite vertex 0, 1, 2).
P2Local p2_nodal(const TriangleGeometry& g, const std::function<double(Point)>& f) {
  P2Local d{};
  for (int i = 0; i < 3; ++i) {
    d[i] = f(g.p[i]);
    d[3 + i] = f((g.p[(i + 1) % 3] + g.p[(i + 2) % 3]) * 0.5);
  }
  return d;
}

double sym_diff(const Sym2& a, const Sym2& b) { return frobenius(a - b); }

}  // namespace

TEST_CASE("P2 evaluation") {
  const TriangleGeometry ref({0, 0}, {1, 0}, {0, 1});
  SUBCASE("hessian of x^2") {
    const P2Local d = p2_nodal(ref, [](Point p) { return p.x * p.x; });
    const P2Eval e = eval_p2(ref, d, {0.2, 0.3, 0.5}, 2);
    CHECK(e.hessian.xx == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(e.hessian.xy) < 1e-13);
    CHECK(std::abs(e.hessian.yy) < 1e-13);
  }
  SUBCASE("constants") {
    P2Local d;
    d.fill(3.5);
    for (const Bary& l : triangle_rule(5).points) {
      const P2Eval e = eval_p2(ref, d, l, 2);
      CHECK(e.value == doctest::Approx(3.5).epsilon(1e-14));
      CHECK(norm(e.gradient) < 1e-13);
      CHECK(frobenius(e.hessian) < 1e-13);
    }
  }
  SUBCASE("partition of unity") {
    std::mt19937 rng(3);
    const TriangleGeometry g = random_triangle(rng);
    for (const Bary& l : triangle_rule(8).points) {
      const auto phi = p2_basis(l);
      double s = 0.0;
      for (double v : phi) s += v;
      CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
      const auto grads = p2_basis_gradients(g, l);
      Vec2 gs{};
      for (const Vec2& v : grads) gs += v;
      CHECK(norm(gs) < 1e-12);
    }
  }
  SUBCASE("gradient against central differences") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
      const TriangleGeometry g = random_triangle(rng);
      P2Local d;
      for (double& v : d) v = u(rng);
      const Bary l{0.3, 0.45, 0.25};
      const Point x = g.map(l);
      const double h = 1e-6;
      auto value = [&](Point p) { return eval_p2(g, d, g.barycentric(p), 0).value; };
      const Vec2 fd{(value(x + Vec2{h, 0}) - value(x - Vec2{h, 0})) / (2 * h),
                    (value(x + Vec2{0, h}) - value(x - Vec2{0, h})) / (2 * h)};
      const Vec2 gr = eval_p2(g, d, l, 1).gradient;
      CHECK(norm(fd - gr) <= 1e-7 * std::max(1.0, norm(gr)));
      // Hessian is symmetric and constant.
      const Sym2 h1 = eval_p2(g, d, l, 2).hessian, h2 = eval_p2(g, d, {0.1, 0.1, 0.8}, 2).hessian;
      CHECK(sym_diff(h1, h2) < 1e-12);
    }
  }
  SUBCASE("order above 2 is rejected") {
    P2Local d{};
    CHECK_THROWS_AS(eval_p2(ref, d, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 3), std::invalid_argument);
  }
}

TEST_CASE("P2 DOF map") {
  const Mesh m = refine_uniform(unit_square_mesh());
  const P2DofMap dofs(m);
  CHECK(dofs.num_dofs() == m.num_vertices() + m.num_edges());
  int constrained = 0;
  for (int d = 0; d < dofs.num_dofs(); ++d) constrained += dofs.constrained(d);
  CHECK(constrained + dofs.num_free() == dofs.num_dofs());
  CHECK(constrained == 2 * m.num_boundary_edges());
  const auto u = p2_interpolate(m, [](Point p) { return p.x * (1 - p.x) * p.y * (1 - p.y); });
  CHECK(dofs.expand(dofs.restrict_to_free(u)) == u);
}

namespace {

HctLocal hct_dofs_from(const TriangleGeometry& g, const std::function<double(Point)>& f,
                       const std::function<Vec2(Point)>& grad) {
  HctLocal d{};
  for (int k = 0; k < 3; ++k) {
    d[k] = f(g.p[k]);
    const Vec2 gr = grad(g.p[k]);
    d[3 + 2 * k] = gr.x;
    d[4 + 2 * k] = gr.y;
    const Point a = g.p[(k + 1) % 3], b = g.p[(k + 2) % 3];
    const Vec2 e = b - a;
    const Vec2 n = Vec2{e.y, -e.x} / norm(e);
    d[9 + k] = dot(grad((a + b) * 0.5), n);
  }
  return d;
}

}  // namespace

TEST_CASE("HCT macroelement") {
  std::mt19937 rng(5);
  const TriangleGeometry g = random_triangle(rng);
  SUBCASE("quadratic reproduction") {
    auto q = [](Point p) { return p.x * p.x + p.x * p.y; };
    auto gq = [](Point p) { return Vec2{2 * p.x + p.y, p.x}; };
    const HctLocal d = hct_dofs_from(g, q, gq);
    for (const Bary& l : triangle_rule(6).points) {
      const Point x = g.map(l);
      const HctEval e = eval_hct(g, d, x, 2);
      CHECK(std::abs(e.value - q(x)) < 1e-12);
      CHECK(norm(e.gradient - gq(x)) < 1e-11);
      CHECK(sym_diff(e.hessian, Sym2{2, 1, 0}) < 1e-10);
    }
  }
  SUBCASE("cubic reproduction") {
    auto q = [](Point p) { return p.x * p.x * p.x - 2 * p.x * p.y * p.y + p.y; };
    auto gq = [](Point p) { return Vec2{3 * p.x * p.x - 2 * p.y * p.y, -4 * p.x * p.y + 1}; };
    const HctLocal d = hct_dofs_from(g, q, gq);
    for (const Bary& l : triangle_rule(6).points) {
      const Point x = g.map(l);
      CHECK(std::abs(eval_hct(g, d, x, 0).value - q(x)) < 1e-12);
    }
  }
  SUBCASE("C1 across the internal sub-edges") {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HctLocal d;
    for (double& v : d) v = u(rng);
    const HctElement el(g, d);
    for (int k = 0; k < 3; ++k) {
      // Sub-edge from vertex k to the centroid separates sub-triangles k+1 and k+2.
      for (int i = 1; i <= 5; ++i) {
        const double t = i / 6.0;
        Bary l{(1 - t) / 3, (1 - t) / 3, (1 - t) / 3};
        l[k] += t;
        const HctEval a = el.eval_sub((k + 1) % 3, l, 1), b = el.eval_sub((k + 2) % 3, l, 1);
        CHECK(std::abs(a.value - b.value) < 1e-12);
        CHECK(norm(a.gradient - b.gradient) < 1e-12);
      }
    }
  }
  SUBCASE("zero DOFs") {
    const HctLocal d{};
    const HctEval e = eval_hct(g, d, g.centroid(), 2);
    CHECK(e.value == 0.0);
    CHECK(norm(e.gradient) == 0.0);
    CHECK(frobenius(e.hessian) == 0.0);
  }
  SUBCASE("outside point") {
    const HctLocal d{};
    CHECK_THROWS_AS(eval_hct(g, d, g.p[0] + (g.p[0] - g.centroid()), 0), std::domain_error);
  }
}

TEST_CASE("HHJ element") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const TriangleGeometry g = random_triangle(rng);
  const HhjElement el(g);
  CHECK(std::isfinite(el.condition_number()));
  SUBCASE("identity") {
    const HhjLocal d = el.dofs_of({Sym2::identity(), Sym2::identity(), Sym2::identity()});
    for (const Bary& l : triangle_rule(4).points) CHECK(sym_diff(eval_hhj(g, d, l), Sym2::identity()) < 1e-12);
  }
  SUBCASE("round trip for random P1 tensors") {
    for (int trial = 0; trial < 20; ++trial) {
      std::array<Sym2, 3> v;
      for (Sym2& s : v) s = {u(rng), u(rng), u(rng)};
      const auto back = el.vertex_values(el.dofs_of(v));
      for (int i = 0; i < 3; ++i) CHECK(sym_diff(back[i], v[i]) < 1e-10);
    }
  }
  SUBCASE("edge moments of a constant nn-trace") {
    const HhjLocal d = el.dofs_of({Sym2::identity(), Sym2::identity(), Sym2::identity()});
    for (int j = 0; j < 6; ++j) CHECK(d[j] == doctest::Approx(0.5).epsilon(1e-13));
  }
}

TEST_CASE("assembled HHJ field has a single-valued nn-trace") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mesh m = refine_nvb(l_shape_mesh(), std::vector<int>{0, 2, 4});
  std::vector<double> ed(2 * m.num_edges()), cd(3 * m.num_triangles());
  for (double& v : ed) v = u(rng);
  for (double& v : cd) v = u(rng);
  const MomentTensor s(m, ed, cd);
  double worst = 0.0;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (m.boundary_edge(e)) continue;
    const EdgeFrame f = edge_frame(m, e);
    const TriangleGeometry gp = m.geometry(f.plus_triangle), gm = m.geometry(f.minus_triangle);
    const EdgeRule& r = edge_rule(5);
    for (std::size_t q = 0; q < r.size(); ++q) {
      const Point x = f.a + (f.b - f.a) * r.points[q];
      const double a = s.eval(f.plus_triangle, gp.barycentric(x)).nn(f.n);
      const double b = s.eval(f.minus_triangle, gm.barycentric(x)).nn(f.n);
      worst = std::max(worst, std::abs(a - b));
    }
  }
  CHECK(worst < 1e-12);
}
