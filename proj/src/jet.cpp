#include "plategoal/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace plategoal {

namespace {

constexpr double kFact[5] = {1.0, 1.0, 2.0, 6.0, 24.0};

}  // namespace

Jet4 Jet4::variable_x(Point at) {
  Jet4 j(at.x);
  j.coeff(1, 0) = 1.0;
  return j;
}

Jet4 Jet4::variable_y(Point at) {
  Jet4 j(at.y);
  j.coeff(0, 1) = 1.0;
  return j;
}

double Jet4::derivative(int i, int j) const {
  if (i < 0 || j < 0 || i + j > kOrder) throw std::out_of_range("jet derivative beyond order 4");
  return coeff(i, j) * kFact[i] * kFact[j];
}

Jet4 Jet4::operator+(const Jet4& o) const {
  Jet4 r;
  for (int k = 0; k < kSize; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

Jet4 Jet4::operator-(const Jet4& o) const {
  Jet4 r;
  for (int k = 0; k < kSize; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

Jet4 Jet4::operator-() const {
  Jet4 r;
  for (int k = 0; k < kSize; ++k) r.c_[k] = -c_[k];
  return r;
}

Jet4 Jet4::operator+(double s) const {
  Jet4 r = *this;
  r.c_[0] += s;
  return r;
}

Jet4 Jet4::operator*(double s) const {
  Jet4 r;
  for (int k = 0; k < kSize; ++k) r.c_[k] = c_[k] * s;
  return r;
}

Jet4 Jet4::operator*(const Jet4& o) const {
  Jet4 r;
  for (int d1 = 0; d1 <= kOrder; ++d1) {
    for (int j1 = 0; j1 <= d1; ++j1) {
      const double a = c_[slot(d1 - j1, j1)];
      if (a == 0.0) continue;
      for (int d2 = 0; d1 + d2 <= kOrder; ++d2) {
        for (int j2 = 0; j2 <= d2; ++j2) r.c_[slot(d1 - j1 + d2 - j2, j1 + j2)] += a * o.c_[slot(d2 - j2, j2)];
      }
    }
  }
  return r;
}

Jet4 Jet4::compose(const std::array<double, 5>& d) const {
  Jet4 h = *this;
  h.c_[0] = 0.0;
  Jet4 r(d[0]);
  Jet4 hk(1.0);
  for (int k = 1; k <= kOrder; ++k) {
    hk = hk * h;
    r = r + hk * (d[k] / kFact[k]);
  }
  return r;
}

Jet4 Jet4::operator/(const Jet4& o) const {
  const double a = o.value();
  if (a == 0.0) throw std::domain_error("jet division by a jet with zero value");
  // 1/x derivatives: (-1)^k k! / x^(k+1)
  const Jet4 inv = o.compose({1.0 / a, -1.0 / (a * a), 2.0 / (a * a * a), -6.0 / (a * a * a * a),
                              24.0 / (a * a * a * a * a)});
  return *this * inv;
}

Jet4 pow(const Jet4& a, double p) {
  const double x = a.value();
  if (x <= 0.0) throw std::domain_error("jet pow requires a positive base");
  std::array<double, 5> d{};
  double coef = 1.0;
  for (int k = 0; k <= 4; ++k) {
    d[k] = coef * std::pow(x, p - k);
    coef *= (p - k);
  }
  return a.compose(d);
}

Jet4 sqrt(const Jet4& a) { return pow(a, 0.5); }

Jet4 sin(const Jet4& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({s, c, -s, -c, s});
}

Jet4 cos(const Jet4& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({c, -s, -c, s, c});
}

Jet4 atan(const Jet4& a) {
  const double x = a.value();
  const double q = 1.0 / (1.0 + x * x);
  // derivatives of atan: q, -2x q^2, (6x^2 - 2) q^3, 24 x (1 - x^2) q^4
  return a.compose({std::atan(x), q, -2.0 * x * q * q, (6.0 * x * x - 2.0) * q * q * q,
                    24.0 * x * (1.0 - x * x) * q * q * q * q});
}

Jet4 atan2(const Jet4& y, const Jet4& x, double theta0) {
  const double x0 = x.value(), y0 = y.value();
  // tan(theta - theta0) = cross((x0, y0), (x, y)) / dot((x0, y0), (x, y)), zero at the base point
  const Jet4 w = (y * x0 - x * y0) / (x * x0 + y * y0);
  return atan(w) + theta0;
}

}  // namespace plategoal
