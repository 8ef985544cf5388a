#include "plategoal/density.hpp"

#include <algorithm>

#include "plategoal/quadrature.hpp"

namespace plategoal {

double Density::integrate(const TriangleGeometry& g, const std::function<double(Point)>& v) const {
  std::vector<DensityPoint> pts;
  sample(g, pts);
  double s = 0.0;
  for (const DensityPoint& p : pts) s += p.weight * p.value * v(p.x);
  return s;
}

double Density::integrate(const Mesh& mesh, const std::function<double(Point)>& v) const {
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) s += integrate(mesh.geometry(t), v);
  return s;
}

void append_rule_points(const TriangleGeometry& g, int degree, std::vector<DensityPoint>& out) {
  const QuadratureRule& rule = triangle_rule(degree);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    out.push_back({g.map(rule.points[q]), rule.weights[q] * 2.0 * g.area, 0.0});
  }
}

void append_graded_corner_points(const TriangleGeometry& g, int corner, int npoints,
                                 std::vector<DensityPoint>& out) {
  std::vector<double> x, w;
  gauss_legendre(npoints, x, w);
  const Point S = g.p[corner];
  const Vec2 a = g.p[(corner + 1) % 3] - S;
  const Vec2 b = g.p[(corner + 2) % 3] - g.p[(corner + 1) % 3];
  for (int i = 0; i < npoints; ++i) {
    const double u = x[i] * x[i] * x[i] * x[i];
    const double du = 4.0 * x[i] * x[i] * x[i];
    for (int j = 0; j < npoints; ++j) {
      const Point p = S + a * u + b * (u * x[j]);
      out.push_back({p, w[i] * w[j] * 2.0 * g.area * u * du, 0.0});
    }
  }
}

std::array<TriangleGeometry, 4> red_children(const TriangleGeometry& g) {
  const Point m0 = (g.p[1] + g.p[2]) * 0.5;
  const Point m1 = (g.p[2] + g.p[0]) * 0.5;
  const Point m2 = (g.p[0] + g.p[1]) * 0.5;
  return {TriangleGeometry(g.p[0], m2, m1), TriangleGeometry(m2, g.p[1], m0),
          TriangleGeometry(m1, m0, g.p[2]), TriangleGeometry(m0, m1, m2)};
}

FieldDensity::FieldDensity(std::function<double(Point)> f, QuadraturePlan plan)
    : f_(std::move(f)), plan_(plan) {}

void FieldDensity::sample(const TriangleGeometry& g, std::vector<DensityPoint>& out) const {
  const std::size_t first = out.size();
  sample_cell(g, plan_.near_splits, out);
  for (std::size_t k = first; k < out.size(); ++k) out[k].value = f_(out[k].x);
}

void FieldDensity::sample_cell(const TriangleGeometry& g, int extra_splits, std::vector<DensityPoint>& out) const {
  const double diam = g.diameter();
  int corner = -1;
  double dist = 0.0;
  if (plan_.singular_point) {
    dist = norm(g.p[0] - *plan_.singular_point);
    for (int i = 0; i < 3; ++i) {
      const double d = norm(g.p[i] - *plan_.singular_point);
      if (d <= 1e-14 * diam) corner = i;
      dist = std::min(dist, d);
    }
  }
  const bool too_big = plan_.max_cell_diameter > 0.0 && diam > plan_.max_cell_diameter;
  if (too_big || (corner < 0 && plan_.singular_point && extra_splits > 0 && dist < 2.0 * diam)) {
    for (const TriangleGeometry& c : red_children(g)) sample_cell(c, too_big ? extra_splits : extra_splits - 1, out);
    return;
  }
  if (corner >= 0) {
    append_graded_corner_points(g, corner, plan_.graded_points, out);
  } else {
    append_rule_points(g, plan_.degree, out);
  }
}

}  // namespace plategoal
