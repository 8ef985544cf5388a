#pragma once

#include <vector>

#include "plategoal/density.hpp"
#include "plategoal/hct.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/p2.hpp"

namespace plategoal {

/// C1 reconstruction by patch averaging: every interior HCT nodal value is the mean of the
/// one-sided P2 values over the elements sharing it; boundary nodal values are zero.
HctFunction enrich(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& v);

struct GoalTerm {
  double global = 0.0;                 ///< signed sum over elements
  std::vector<double> element_signed;  ///< int_K w (s - v)
  std::vector<double> element_abs;     ///< |int_K w (s - v)|
};

/// int w (s - v) for a goal weight density w, integrated on the HCT sub-triangles.
GoalTerm nonconformity_goal_term(const Mesh& mesh, const P2DofMap& dofs, const HctFunction& s,
                                 const std::vector<double>& v, const Density& weight);

/// The three HCT sub-triangles (p[i+1], p[i+2], centroid) of a macro triangle.
std::array<TriangleGeometry, 3> hct_subtriangles(const TriangleGeometry& g);

struct C1Mismatch {
  double value = 0.0;
  double gradient = 0.0;
};

/// Two-sided value/gradient differences of s at `points_per_edge` interior points of every
/// interior edge.
C1Mismatch c1_mismatch(const Mesh& mesh, const HctFunction& s, int points_per_edge = 3);

}  // namespace plategoal
