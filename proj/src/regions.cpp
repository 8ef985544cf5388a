#include "plategoal/regions.hpp"

#include <algorithm>
#include <cmath>

namespace plategoal {

namespace {

double point_segment_distance(Point p, Point a, Point b) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  double s = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return norm(p - (a + d * s));
}

double point_triangle_distance(Point p, const TriangleGeometry& g) {
  const Bary l = g.barycentric(p);
  if (l[0] >= 0.0 && l[1] >= 0.0 && l[2] >= 0.0) return 0.0;
  return std::min({point_segment_distance(p, g.p[0], g.p[1]), point_segment_distance(p, g.p[1], g.p[2]),
                   point_segment_distance(p, g.p[2], g.p[0])});
}

}  // namespace

std::vector<Point> clip_polygon(const std::vector<Point>& poly, const std::vector<double>& phi) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const bool in_i = phi[i] <= 0.0, in_j = phi[j] <= 0.0;
    if (in_i) out.push_back(poly[i]);
    if (in_i != in_j) {
      const double s = phi[i] / (phi[i] - phi[j]);
      out.push_back(poly[i] + (poly[j] - poly[i]) * s);
    }
  }
  return out;
}

GoalWeight GoalWeight::strip(double lo, double hi, double area, bool normalized, int degree) {
  GoalWeight w;
  w.shape_ = Shape::strip;
  w.lo_ = lo;
  w.hi_ = hi;
  w.area_ = area;
  w.scale_ = normalized ? 1.0 / area : 1.0;
  w.degree_ = degree;
  return w;
}

GoalWeight GoalWeight::disk(Point center, double radius, double area, bool normalized, int degree) {
  GoalWeight w;
  w.shape_ = Shape::disk;
  w.center_ = center;
  w.radius_ = radius;
  w.area_ = area;
  w.scale_ = normalized ? 1.0 / area : 1.0;
  w.leaf_ = radius / 2048.0;
  w.degree_ = degree;
  return w;
}

GoalWeight GoalWeight::with_degree(int degree) const {
  GoalWeight w = *this;
  w.degree_ = degree;
  return w;
}

bool GoalWeight::contains(Point p) const {
  if (shape_ == Shape::strip) {
    const double s = p.x + p.y;
    return s >= lo_ && s <= hi_;
  }
  const Vec2 d = p - center_;
  return dot(d, d) <= radius_ * radius_;
}

void GoalWeight::append_polygon(const std::vector<Point>& poly, std::vector<DensityPoint>& out) const {
  for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
    const TriangleGeometry piece(poly[0], poly[k], poly[k + 1]);
    if (!(piece.area > 0.0)) continue;
    const std::size_t first = out.size();
    append_rule_points(piece, degree_, out);
    for (std::size_t q = first; q < out.size(); ++q) out[q].value = scale_;
  }
}

void GoalWeight::sample(const TriangleGeometry& g, std::vector<DensityPoint>& out) const {
  if (shape_ == Shape::disk) {
    sample_disk(g, out);
    return;
  }
  std::vector<Point> poly(g.p.begin(), g.p.end());
  std::vector<double> phi(3);
  for (int i = 0; i < 3; ++i) phi[i] = lo_ - (poly[i].x + poly[i].y);
  poly = clip_polygon(poly, phi);
  phi.resize(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) phi[i] = (poly[i].x + poly[i].y) - hi_;
  poly = clip_polygon(poly, phi);
  if (poly.size() >= 3) append_polygon(poly, out);
}

void GoalWeight::sample_disk(const TriangleGeometry& g, std::vector<DensityPoint>& out) const {
  const double r2 = radius_ * radius_;
  std::array<double, 3> phi{};
  bool inside = true;
  for (int i = 0; i < 3; ++i) {
    const Vec2 d = g.p[i] - center_;
    phi[i] = dot(d, d) - r2;
    inside = inside && phi[i] <= 0.0;
  }
  if (inside) {
    append_polygon({g.p[0], g.p[1], g.p[2]}, out);
    return;
  }
  if (point_triangle_distance(center_, g) >= radius_) return;
  if (g.diameter() > leaf_) {
    for (const TriangleGeometry& c : red_children(g)) sample_disk(c, out);
    return;
  }
  const auto poly = clip_polygon({g.p[0], g.p[1], g.p[2]}, {phi[0], phi[1], phi[2]});
  if (poly.size() >= 3) append_polygon(poly, out);
}

}  // namespace plategoal
