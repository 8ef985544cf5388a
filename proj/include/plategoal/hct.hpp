#pragma once

#include <array>
#include <vector>

#include "plategoal/geometry.hpp"
#include "plategoal/mesh.hpp"

namespace plategoal {

// Hsieh-Clough-Tocher cubic macroelement split at the barycentre.
// Local DOF order (12): values at vertices 0..2; gradients (x, y) at vertices 0..2;
// derivative along the outward normal at the midpoints of sides 0..2.

using HctLocal = std::array<double, 12>;

struct HctEval {
  double value = 0.0;
  Vec2 gradient;
  Sym2 hessian;
};

/// Cubic Bezier ordinates of the three sub-triangles. Sub-triangle i has vertices
/// (p[i+1], p[i+2], centroid).
class HctElement {
 public:
  HctElement(const TriangleGeometry& g, const HctLocal& dofs);

  /// Sub-triangle holding barycentric point l: the one whose excluded vertex has the smallest
  /// coordinate, ties to the lowest index.
  static int locate(const Bary& l);

  HctEval eval(const Bary& l, int order) const { return eval_sub(locate(l), l, order); }
  /// Evaluation with the polynomial of a given sub-triangle (for two-sided checks).
  HctEval eval_sub(int sub, const Bary& l, int order) const;
  /// Hessian of sub-triangle `sub` at the point with sub-triangle barycentrics beta.
  /// beta = (weight of p[sub+1], weight of p[sub+2], weight of centroid).
  HctEval eval_sub_local(int sub, const Bary& beta, int order) const;

  const TriangleGeometry& geometry() const { return g_; }

 private:
  TriangleGeometry g_;
  std::array<std::array<double, 10>, 3> b_{};
  std::array<std::array<Vec2, 3>, 3> dbeta_{};  // gradients of the sub-barycentrics
};

/// Point evaluation; throws std::domain_error when x is outside the triangle.
HctEval eval_hct(const TriangleGeometry& g, const HctLocal& dofs, Point x, int order);

/// Global C1 function with clamped boundary: vertex values and gradients, and one normal
/// derivative per edge along the edge's global normal. Boundary entries are zero.
struct HctFunction {
  std::vector<double> value;
  std::vector<Vec2> gradient;
  std::vector<double> normal_derivative;

  static HctFunction zeros(const Mesh& mesh);
  HctLocal local(const Mesh& mesh, int t) const;
};

/// Macroelements for every triangle of the mesh.
std::vector<HctElement> hct_elements(const Mesh& mesh, const HctFunction& f);

}  // namespace plategoal
