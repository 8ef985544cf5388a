#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plategoal/geometry.hpp"
#include "plategoal/mesh.hpp"

namespace plategoal {

/// A weighted sample: weight already includes the physical area element.
struct DensityPoint {
  Point x;
  double weight = 0.0;
  double value = 0.0;
};

/// Per-triangle quadrature of a scalar field (loads, goal weights). Integrals of
/// density * v over a triangle are sum(weight * value * v(x)).
class Density {
 public:
  virtual ~Density() = default;
  /// Appends the samples of triangle g to out.
  virtual void sample(const TriangleGeometry& g, std::vector<DensityPoint>& out) const = 0;

  double integrate(const TriangleGeometry& g, const std::function<double(Point)>& v) const;
  double integrate(const Mesh& mesh, const std::function<double(Point)>& v) const;
};

class ZeroDensity final : public Density {
 public:
  void sample(const TriangleGeometry&, std::vector<DensityPoint>&) const override {}
};

/// How a smooth or mildly singular field is integrated on a triangle.
struct QuadraturePlan {
  int degree = 8;
  /// Composite red subdivision until cells have at most this diameter (0 disables).
  double max_cell_diameter = 0.0;
  /// Point singularity: triangles with a vertex there use a graded Duffy rule; triangles
  /// closer than two diameters are split `near_splits` extra times.
  std::optional<Point> singular_point;
  int near_splits = 1;
  int graded_points = 14;
};

class FieldDensity final : public Density {
 public:
  FieldDensity(std::function<double(Point)> f, QuadraturePlan plan);
  void sample(const TriangleGeometry& g, std::vector<DensityPoint>& out) const override;

 private:
  void sample_cell(const TriangleGeometry& g, int extra_splits, std::vector<DensityPoint>& out) const;

  std::function<double(Point)> f_;
  QuadraturePlan plan_;
};

/// Quadrature points of the rule `degree` on g, with physical weights.
void append_rule_points(const TriangleGeometry& g, int degree, std::vector<DensityPoint>& out);
/// Duffy rule collapsed at vertex `corner` of g, geometrically graded toward it (u = w^4).
void append_graded_corner_points(const TriangleGeometry& g, int corner, int npoints,
                                 std::vector<DensityPoint>& out);
/// The four red-refinement children of a triangle.
std::array<TriangleGeometry, 4> red_children(const TriangleGeometry& g);

}  // namespace plategoal
