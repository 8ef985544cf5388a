#pragma once

#include <array>

#include "plategoal/geometry.hpp"

namespace plategoal {

/// Truncated bivariate Taylor series of total degree <= 4 about a point:
/// f(x0 + dx, y0 + dy) ~ sum c_ij dx^i dy^j. Slot of (i, j) is d (d + 1) / 2 + j, d = i + j.
class Jet4 {
 public:
  static constexpr int kOrder = 4;
  static constexpr int kSize = 15;

  Jet4() = default;
  explicit Jet4(double c) { c_[0] = c; }

  static Jet4 variable_x(Point at);
  static Jet4 variable_y(Point at);

  static constexpr int slot(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }
  double coeff(int i, int j) const { return c_[slot(i, j)]; }
  double& coeff(int i, int j) { return c_[slot(i, j)]; }
  double value() const { return c_[0]; }
  /// d^(i+j) f / dx^i dy^j at the expansion point.
  double derivative(int i, int j) const;

  Jet4 operator+(const Jet4& o) const;
  Jet4 operator-(const Jet4& o) const;
  Jet4 operator*(const Jet4& o) const;
  Jet4 operator/(const Jet4& o) const;
  Jet4 operator-() const;
  Jet4 operator+(double s) const;
  Jet4 operator*(double s) const;

  /// f(this) given f and its first four derivatives at value().
  Jet4 compose(const std::array<double, 5>& d) const;

 private:
  std::array<double, kSize> c_{};
};

inline Jet4 operator*(double s, const Jet4& j) { return j * s; }
inline Jet4 operator+(double s, const Jet4& j) { return j + s; }
inline Jet4 operator-(double s, const Jet4& j) { return -j + s; }

Jet4 sqrt(const Jet4& a);
Jet4 pow(const Jet4& a, double p);
Jet4 sin(const Jet4& a);
Jet4 cos(const Jet4& a);
Jet4 atan(const Jet4& a);
/// Polar angle of (x, y), with the base angle given by theta0 (any branch).
Jet4 atan2(const Jet4& y, const Jet4& x, double theta0);

/// u_xxxx + 2 u_xxyy + u_yyyy read off the degree-4 coefficients.
inline double bilaplacian(const Jet4& u) { return 24.0 * u.coeff(4, 0) + 8.0 * u.coeff(2, 2) + 24.0 * u.coeff(0, 4); }

}  // namespace plategoal
