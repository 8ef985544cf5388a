#pragma once

#include <vector>

#include "plategoal/geometry.hpp"

namespace plategoal {

/// Rule on the reference triangle (0,0),(1,0),(0,1). Weights sum to 1/2.
struct QuadratureRule {
  std::vector<Bary> points;
  std::vector<double> weights;
  int degree = 0;

  std::size_t size() const { return weights.size(); }
};

/// Rule on [0,1]. Weights sum to 1.
struct EdgeRule {
  std::vector<double> points;
  std::vector<double> weights;
  int degree = 0;

  std::size_t size() const { return weights.size(); }
};

inline constexpr int kMaxQuadratureDegree = 20;

/// Rule exact for total degree >= `degree`; 0 <= degree <= 20. Rules are cached.
const QuadratureRule& triangle_rule(int degree);
const EdgeRule& edge_rule(int degree);

/// Gauss-Legendre nodes and weights on [0,1] with n points.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Largest monomial integration error (relative) of a rule up to its stated degree.
double monomial_exactness_error(const QuadratureRule& rule);
double monomial_exactness_error(const EdgeRule& rule);

/// Integral of f over the triangle with a reference rule.
template <class F>
double integrate(const TriangleGeometry& g, const QuadratureRule& rule, F&& f) {
  double s = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) s += rule.weights[q] * f(g.map(rule.points[q]));
  return s * 2.0 * g.area;
}

}  // namespace plategoal
