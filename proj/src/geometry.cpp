#include "plategoal/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace plategoal {

double signed_area(Point a, Point b, Point c) { return 0.5 * cross(b - a, c - a); }

TriangleGeometry::TriangleGeometry(Point a, Point b, Point c) : p{a, b, c} {
  area = signed_area(a, b, c);
  const double twice = 2.0 * area;
  for (int i = 0; i < 3; ++i) {
    // grad lambda_i is the inward normal of the opposite side scaled by 1/height.
    const Vec2 e = p[(i + 2) % 3] - p[(i + 1) % 3];
    grad[i] = Vec2{-e.y, e.x} / twice;
  }
}

Bary TriangleGeometry::barycentric(Point x) const {
  const double twice = 2.0 * area;
  Bary l{};
  l[0] = cross(p[2] - p[1], x - p[1]) / twice;
  l[1] = cross(p[0] - p[2], x - p[2]) / twice;
  l[2] = 1.0 - l[0] - l[1];
  return l;
}

double TriangleGeometry::diameter() const {
  return std::max({edge_length(0), edge_length(1), edge_length(2)});
}

double TriangleGeometry::min_angle() const {
  double m = std::numbers::pi;
  for (int i = 0; i < 3; ++i) {
    const Vec2 a = p[(i + 1) % 3] - p[i];
    const Vec2 b = p[(i + 2) % 3] - p[i];
    m = std::min(m, std::atan2(std::abs(cross(a, b)), dot(a, b)));
  }
  return m;
}

}  // namespace plategoal
