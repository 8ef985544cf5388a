#pragma once

#include <vector>

#include "plategoal/density.hpp"

namespace plategoal {

/// Convex polygon clipped to {phi <= 0} for phi linear along the polygon edges
/// (phi given at the polygon vertices).
std::vector<Point> clip_polygon(const std::vector<Point>& poly, const std::vector<double>& phi);

/// Characteristic function of a region of interest, times a scale factor.
class GoalWeight final : public Density {
 public:
  enum class Shape { strip, disk };

  /// {lo <= x + y <= hi}
  static GoalWeight strip(double lo, double hi, double area, bool normalized, int degree = 6);
  /// {x^2 + y^2 <= r^2}; `area` is the measure of the disk part inside the domain.
  static GoalWeight disk(Point center, double radius, double area, bool normalized, int degree = 6);

  void sample(const TriangleGeometry& g, std::vector<DensityPoint>& out) const override;

  Shape shape() const { return shape_; }
  double area() const { return area_; }
  /// 1/|omega| when normalized, otherwise 1.
  double scale() const { return scale_; }
  bool contains(Point p) const;
  GoalWeight with_degree(int degree) const;
  /// Cut cells of the disk are subdivided down to this diameter before linear clipping.
  double leaf_size() const { return leaf_; }

 private:
  GoalWeight() = default;
  void sample_disk(const TriangleGeometry& g, std::vector<DensityPoint>& out) const;
  void append_polygon(const std::vector<Point>& poly, std::vector<DensityPoint>& out) const;

  Shape shape_ = Shape::strip;
  double lo_ = 0.0, hi_ = 0.0;
  Point center_;
  double radius_ = 0.0;
  double area_ = 0.0;
  double scale_ = 1.0;
  double leaf_ = 0.0;
  int degree_ = 6;
};

}  // namespace plategoal
