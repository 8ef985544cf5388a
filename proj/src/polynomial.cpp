#include "plategoal/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace plategoal {

BivariatePolynomial::BivariatePolynomial(int degree, Point center)
    : degree_(degree), center_(center), c_((degree + 1) * (degree + 1), 0.0) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be non-negative");
}

BivariatePolynomial BivariatePolynomial::constant(double c, Point center) {
  BivariatePolynomial p(0, center);
  p.c_[0] = c;
  return p;
}

BivariatePolynomial BivariatePolynomial::coordinate(int axis, Point center) {
  BivariatePolynomial p(1, center);
  if (axis == 0) {
    p.set_coeff(0, 0, center.x);
    p.set_coeff(1, 0, 1.0);
  } else {
    p.set_coeff(0, 0, center.y);
    p.set_coeff(0, 1, 1.0);
  }
  return p;
}

double BivariatePolynomial::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0.0;
  return c_[index(i, j)];
}

void BivariatePolynomial::set_coeff(int i, int j, double v) {
  if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("coefficient beyond the polynomial degree");
  c_[index(i, j)] = v;
}

double BivariatePolynomial::operator()(Point p) const {
  const double sx = p.x - center_.x, sy = p.y - center_.y;
  double r = 0.0;
  for (int i = degree_; i >= 0; --i) {
    double row = 0.0;
    for (int j = degree_ - i; j >= 0; --j) row = row * sy + c_[index(i, j)];
    r = r * sx + row;
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::dx() const {
  BivariatePolynomial d(std::max(degree_ - 1, 0), center_);
  for (int i = 1; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) d.set_coeff(i - 1, j, i * coeff(i, j));
  }
  return d;
}

BivariatePolynomial BivariatePolynomial::dy() const {
  BivariatePolynomial d(std::max(degree_ - 1, 0), center_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 1; i + j <= degree_; ++j) d.set_coeff(i, j - 1, j * coeff(i, j));
  }
  return d;
}

void BivariatePolynomial::require_same_center(const BivariatePolynomial& o) const {
  if (!(center_ == o.center_)) throw std::invalid_argument("polynomials expanded about different points");
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  require_same_center(o);
  BivariatePolynomial r(std::max(degree_, o.degree_), center_);
  for (int i = 0; i <= r.degree_; ++i) {
    for (int j = 0; i + j <= r.degree_; ++j) r.set_coeff(i, j, coeff(i, j) + o.coeff(i, j));
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const { return *this + o * -1.0; }

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  require_same_center(o);
  BivariatePolynomial r(degree_ + o.degree_, center_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) {
      const double a = c_[index(i, j)];
      if (a == 0.0) continue;
      for (int k = 0; k <= o.degree_; ++k) {
        for (int l = 0; k + l <= o.degree_; ++l) r.c_[r.index(i + k, j + l)] += a * o.c_[o.index(k, l)];
      }
    }
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::operator*(double s) const {
  BivariatePolynomial r = *this;
  for (double& v : r.c_) v *= s;
  return r;
}

BivariatePolynomial BivariatePolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  BivariatePolynomial r = constant(1.0, center_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

BivariatePolynomial bilaplacian_poly(const BivariatePolynomial& u) {
  const BivariatePolynomial uxx = u.dx().dx();
  const BivariatePolynomial uyy = u.dy().dy();
  return uxx.dx().dx() + uxx.dy().dy() * 2.0 + uyy.dy().dy();
}

}  // namespace plategoal
