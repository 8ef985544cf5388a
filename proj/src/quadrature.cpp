#include "plategoal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace plategoal {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void add_orbit3(QuadratureRule& r, double a, double w) {
  const double b = 1.0 - 2.0 * a;
  r.points.push_back({b, a, a});
  r.points.push_back({a, b, a});
  r.points.push_back({a, a, b});
  for (int k = 0; k < 3; ++k) r.weights.push_back(w);
}

QuadratureRule conical_rule(int degree) {
  // Collapsed square: x = u, y = v (1 - u), jacobian (1 - u) raises the u-degree by one.
  const int n = (degree + 2 + 1) / 2;
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  QuadratureRule r;
  r.degree = degree;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double px = x[i];
      const double py = x[j] * (1.0 - x[i]);
      r.points.push_back({1.0 - px - py, px, py});
      r.weights.push_back(w[i] * w[j] * (1.0 - x[i]));
    }
  }
  return r;
}

QuadratureRule make_triangle_rule(int degree) {
  QuadratureRule r;
  if (degree <= 1) {
    r.degree = 1;
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(0.5);
  } else if (degree == 2) {
    r.degree = 2;
    add_orbit3(r, 1.0 / 6.0, 1.0 / 6.0);
  } else if (degree <= 4) {
    r.degree = 4;
    add_orbit3(r, 0.445948490915965, 0.5 * 0.223381589678011);
    add_orbit3(r, 0.091576213509771, 0.5 * 0.109951743655322);
  } else if (degree == 5) {
    r.degree = 5;
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(0.5 * 0.225);
    add_orbit3(r, 0.470142064105115, 0.5 * 0.132394152788506);
    add_orbit3(r, 0.101286507323456, 0.5 * 0.125939180544827);
  } else {
    r = conical_rule(degree);
  }
  return r;
}

EdgeRule make_edge_rule(int degree) {
  EdgeRule r;
  r.degree = std::max(degree, 1);
  gauss_legendre((r.degree + 2) / 2, r.points, r.weights);
  if (r.degree % 2 == 0) r.degree += 1;
  return r;
}

template <class Rule, class Make>
const Rule& cached(int degree, Make make, std::unique_ptr<Rule> (&cache)[kMaxQuadratureDegree + 1]) {
  if (degree < 0 || degree > kMaxQuadratureDegree) {
    throw std::invalid_argument("quadrature degree " + std::to_string(degree) + " unsupported");
  }
  static std::mutex mtx;
  std::lock_guard lock(mtx);
  if (!cache[degree]) {
    auto rule = std::make_unique<Rule>(make(degree));
    if (monomial_exactness_error(*rule) > 1e-13) {
      throw std::logic_error("quadrature rule failed its exactness check");
    }
    cache[degree] = std::move(rule);
  }
  return *cache[degree];
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Map from [-1,1] to [0,1], ascending order.
    x[n - 1 - i] = 0.5 * (z + 1.0);
    w[n - 1 - i] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
}

double monomial_exactness_error(const QuadratureRule& rule) {
  double worst = 0.0;
  for (int a = 0; a <= rule.degree; ++a) {
    for (int b = 0; a + b <= rule.degree; ++b) {
      const double exact = factorial(a) * factorial(b) / factorial(a + b + 2);
      double s = 0.0;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        s += rule.weights[q] * std::pow(rule.points[q][1], a) * std::pow(rule.points[q][2], b);
      }
      worst = std::max(worst, std::abs(s - exact) / exact);
    }
  }
  return worst;
}

double monomial_exactness_error(const EdgeRule& rule) {
  double worst = 0.0;
  for (int a = 0; a <= rule.degree; ++a) {
    const double exact = 1.0 / (a + 1);
    double s = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) s += rule.weights[q] * std::pow(rule.points[q], a);
    worst = std::max(worst, std::abs(s - exact) / exact);
  }
  return worst;
}

const QuadratureRule& triangle_rule(int degree) {
  static std::unique_ptr<QuadratureRule> cache[kMaxQuadratureDegree + 1];
  return cached<QuadratureRule>(degree, make_triangle_rule, cache);
}

const EdgeRule& edge_rule(int degree) {
  static std::unique_ptr<EdgeRule> cache[kMaxQuadratureDegree + 1];
  return cached<EdgeRule>(degree, make_edge_rule, cache);
}

}  // namespace plategoal
