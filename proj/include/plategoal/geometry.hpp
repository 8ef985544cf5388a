#pragma once

#include <array>
#include <cmath>

namespace plategoal {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

using Point = Vec2;

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
/// Counter-clockwise rotation by 90 degrees.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Symmetric 2x2 tensor.
struct Sym2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  constexpr Sym2 operator+(const Sym2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
  constexpr Sym2 operator-(const Sym2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
  constexpr Sym2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }
  constexpr Sym2& operator+=(const Sym2& o) {
    xx += o.xx;
    xy += o.xy;
    yy += o.yy;
    return *this;
  }
  constexpr bool operator==(const Sym2&) const = default;

  /// n^T S n
  constexpr double nn(Vec2 n) const { return xx * n.x * n.x + 2.0 * xy * n.x * n.y + yy * n.y * n.y; }
  /// S v
  constexpr Vec2 apply(Vec2 v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }

  static constexpr Sym2 identity() { return {1.0, 0.0, 1.0}; }
  /// Symmetrised outer product (a b^T + b a^T) / 2.
  static constexpr Sym2 sym_outer(Vec2 a, Vec2 b) {
    return {a.x * b.x, 0.5 * (a.x * b.y + a.y * b.x), a.y * b.y};
  }
};

constexpr Sym2 operator*(double s, const Sym2& t) { return t * s; }

/// Frobenius product S:T.
constexpr double ddot(const Sym2& a, const Sym2& b) {
  return a.xx * b.xx + 2.0 * a.xy * b.xy + a.yy * b.yy;
}

inline double frobenius(const Sym2& a) { return std::sqrt(ddot(a, a)); }

using Bary = std::array<double, 3>;

/// Affine data of a triangle: vertex coordinates, area and constant barycentric gradients.
struct TriangleGeometry {
  std::array<Point, 3> p{};
  std::array<Vec2, 3> grad{};
  double area = 0.0;

  TriangleGeometry() = default;
  TriangleGeometry(Point a, Point b, Point c);

  Point map(const Bary& l) const { return p[0] * l[0] + p[1] * l[1] + p[2] * l[2]; }
  Bary barycentric(Point x) const;
  Point centroid() const { return (p[0] + p[1] + p[2]) / 3.0; }
  double diameter() const;
  /// Length of the side opposite local vertex i.
  double edge_length(int i) const { return norm(p[(i + 2) % 3] - p[(i + 1) % 3]); }
  double min_angle() const;
};

double signed_area(Point a, Point b, Point c);

}  // namespace plategoal
