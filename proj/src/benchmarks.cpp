#include "plategoal/benchmarks.hpp"

#include <cmath>

#include "plategoal/quadrature.hpp"

namespace plategoal {

Mesh unit_square_mesh() {
  return Mesh::build({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, {{0, 1, 2}, {0, 2, 3}});
}

Mesh l_shape_mesh() {
  return Mesh::build({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {-1.0, 1.0}, {-1.0, 0.0}, {-1.0, -1.0}, {0.0, -1.0}},
                     {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 6}, {0, 6, 7}});
}

namespace example1 {

namespace {

constexpr double kScale = 1e12;
const Point kCenter{0.5, 0.5};

BivariatePolynomial make_u() {
  // t (1 - t) = 1/4 - (t - 1/2)^2, so each factor has exact dyadic coefficients about 1/2.
  BivariatePolynomial px(2, kCenter), py(2, kCenter);
  px.set_coeff(0, 0, 0.25);
  px.set_coeff(2, 0, -1.0);
  py.set_coeff(0, 0, 0.25);
  py.set_coeff(0, 2, -1.0);
  return px.pow(10) * py.pow(10) * kScale;
}

// p(t) = (t (1 - t))^10 and its first two derivatives.
struct Factor {
  double v, d1, d2;
};

Factor factor(double t) {
  const double q = t * (1.0 - t);
  const double l = 1.0 - 2.0 * t;
  const double q8 = std::pow(q, 8);
  return {q8 * q * q, 10.0 * q8 * q * l, 90.0 * q8 * l * l - 20.0 * q8 * q};
}

}  // namespace

const BivariatePolynomial& u_poly() {
  static const BivariatePolynomial p = make_u();
  return p;
}

const BivariatePolynomial& f_poly() {
  static const BivariatePolynomial p = bilaplacian_poly(u_poly());
  return p;
}

double u(Point p) { return kScale * factor(p.x).v * factor(p.y).v; }

Vec2 gradient(Point p) {
  const Factor fx = factor(p.x), fy = factor(p.y);
  return Vec2{fx.d1 * fy.v, fx.v * fy.d1} * kScale;
}

Sym2 hessian(Point p) {
  const Factor fx = factor(p.x), fy = factor(p.y);
  return Sym2{fx.d2 * fy.v, fx.d1 * fy.d1, fx.v * fy.d2} * kScale;
}

double goal_exact() {
  // On each x-interval the y-limits are linear, so the inner integral is a polynomial in x.
  std::vector<double> xg, wg, yg, wy;
  gauss_legendre(24, xg, wg);
  gauss_legendre(16, yg, wy);
  const double breaks[4] = {0.0, kStripHi - 1.0, kStripLo, 1.0};
  double total = 0.0;
  for (int piece = 0; piece < 3; ++piece) {
    const double a = breaks[piece], b = breaks[piece + 1];
    for (std::size_t i = 0; i < xg.size(); ++i) {
      const double x = a + (b - a) * xg[i];
      const double y0 = std::max(0.0, kStripLo - x), y1 = std::min(1.0, kStripHi - x);
      double inner = 0.0;
      for (std::size_t j = 0; j < yg.size(); ++j) inner += wy[j] * u({x, y0 + (y1 - y0) * yg[j]});
      total += wg[i] * (b - a) * inner * (y1 - y0);
    }
  }
  return total;
}

}  // namespace example1

namespace example2 {

double polar_angle(Point p) {
  double t = std::atan2(p.y, p.x);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  return t;
}

double g(double theta, double alpha, double omega) {
  const double am = alpha - 1.0, ap = alpha + 1.0;
  const double c1 = std::sin(am * omega) / am - std::sin(ap * omega) / ap;
  const double c2 = std::cos(am * omega) - std::cos(ap * omega);
  return c1 * (std::cos(am * theta) - std::cos(ap * theta)) - (std::sin(am * theta) / am - std::sin(ap * theta) / ap) * c2;
}

double u(Point p, double alpha, double omega) {
  const double r = std::hypot(p.x, p.y);
  if (r == 0.0) return 0.0;
  const double cx = 1.0 - p.x * p.x, cy = 1.0 - p.y * p.y;
  return cx * cx * cy * cy * std::pow(r, 1.0 + alpha) * g(polar_angle(p), alpha, omega);
}

Jet4 u_jet(Point p, bool cutoff, double alpha, double omega) {
  if (p.x == 0.0 && p.y == 0.0) throw std::domain_error("singular solution is not smooth at the origin");
  const Jet4 X = Jet4::variable_x(p), Y = Jet4::variable_y(p);
  const Jet4 r2 = X * X + Y * Y;
  const Jet4 th = atan2(Y, X, polar_angle(p));
  const double am = alpha - 1.0, ap = alpha + 1.0;
  const double c1 = std::sin(am * omega) / am - std::sin(ap * omega) / ap;
  const double c2 = std::cos(am * omega) - std::cos(ap * omega);
  const Jet4 gj = (cos(th * am) - cos(th * ap)) * c1 - (sin(th * am) * (1.0 / am) - sin(th * ap) * (1.0 / ap)) * c2;
  Jet4 w = pow(r2, 0.5 * (1.0 + alpha)) * gj;
  if (cutoff) {
    const Jet4 cx = 1.0 - X * X, cy = 1.0 - Y * Y;
    w = cx * cx * cy * cy * w;
  }
  return w;
}

Sample singular_u_and_f(Point p, double alpha, double omega) {
  const Jet4 j = u_jet(p, true, alpha, omega);
  return {u(p, alpha, omega), bilaplacian(j)};
}

double goal_polar(int n_radial, int n_angular) {
  std::vector<double> tr, wr, ta, wa;
  gauss_legendre(n_radial, tr, wr);
  gauss_legendre(n_angular, ta, wa);
  double total = 0.0;
  for (int i = 0; i < n_radial; ++i) {
    // r = R t^3 clusters nodes toward the corner, where u ~ r^(1 + alpha).
    const double t = tr[i];
    const double r = kRadius * t * t * t;
    const double dr = 3.0 * kRadius * t * t;
    double ring = 0.0;
    for (int j = 0; j < n_angular; ++j) {
      const double th = kOmega * ta[j];
      ring += wa[j] * u({r * std::cos(th), r * std::sin(th)});
    }
    total += wr[i] * dr * r * ring * kOmega;
  }
  return total;
}

}  // namespace example2

double goal_on_mesh(const Mesh& mesh, const GoalWeight& weight, const std::function<double(Point)>& v) {
  return weight.integrate(mesh, v);
}

Problem make_problem(const std::string& id) {
  Problem p;
  p.id = id;
  if (id == "example_1") {
    p.initial_mesh = unit_square_mesh();
    p.exact = example1::u;
    p.f = [](Point x) { return example1::f_poly()(x); };
    QuadraturePlan plan;
    plan.degree = 16;
    plan.max_cell_diameter = 0.05;
    p.load = std::make_shared<FieldDensity>(p.f, plan);
    p.goal = std::make_shared<GoalWeight>(
        GoalWeight::strip(example1::kStripLo, example1::kStripHi, example1::kStripArea, false));
    p.q_ref = example1::goal_exact();
    return p;
  }
  if (id == "example_2") {
    p.initial_mesh = l_shape_mesh();
    p.exact = [](Point x) { return example2::u(x); };
    p.f = [](Point x) { return example2::singular_u_and_f(x).f; };
    QuadraturePlan plan;
    plan.degree = 10;
    plan.max_cell_diameter = 0.25;
    plan.singular_point = Point{0.0, 0.0};
    plan.near_splits = 2;
    plan.graded_points = 14;
    p.load = std::make_shared<FieldDensity>(p.f, plan);
    p.goal = std::make_shared<GoalWeight>(
        GoalWeight::disk({0.0, 0.0}, example2::kRadius, example2::kDiskArea, false));
    p.q_ref = example2::goal_polar();
    return p;
  }
  throw UnknownProblem("unknown problem id '" + id + "' (expected example_1 or example_2)");
}

double reference_goal(const std::string& id) {
  if (id == "example_1") return 0.06044290015;
  if (id == "example_2") return 0.018334438;
  throw UnknownProblem("unknown problem id '" + id + "'");
}

}  // namespace plategoal
