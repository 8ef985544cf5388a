#pragma once

#include <vector>

#include "plategoal/geometry.hpp"

namespace plategoal {

/// Dense bivariate polynomial sum c_ij (x - x0)^i (y - y0)^j with i + j <= degree.
/// Keeping the expansion point near the region of interest avoids the cancellation a
/// monomial basis about the origin suffers for high degrees.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(int degree, Point center = {0.0, 0.0});

  static BivariatePolynomial constant(double c, Point center = {0.0, 0.0});
  /// The coordinate function x (axis 0) or y (axis 1).
  static BivariatePolynomial coordinate(int axis, Point center = {0.0, 0.0});

  int degree() const { return degree_; }
  Point center() const { return center_; }
  double coeff(int i, int j) const;
  void set_coeff(int i, int j, double v);

  double operator()(Point p) const;
  BivariatePolynomial dx() const;
  BivariatePolynomial dy() const;

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(double s) const;
  BivariatePolynomial pow(int k) const;

 private:
  int index(int i, int j) const { return i * (degree_ + 1) + j; }
  void require_same_center(const BivariatePolynomial& o) const;

  int degree_ = 0;
  Point center_;
  std::vector<double> c_{0.0};
};

/// u_xxxx + 2 u_xxyy + u_yyyy
BivariatePolynomial bilaplacian_poly(const BivariatePolynomial& u);

}  // namespace plategoal
