#pragma once

#include <functional>
#include <memory>
#include <numbers>
#include <string>

#include "plategoal/density.hpp"
#include "plategoal/jet.hpp"
#include "plategoal/mesh.hpp"
#include "plategoal/polynomial.hpp"
#include "plategoal/regions.hpp"

namespace plategoal {

class UnknownProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unit square split along the diagonal (0,0)-(1,1).
Mesh unit_square_mesh();
/// (-1,1)^2 minus [0,1)x(-1,0]: three unit squares, each split by the diagonal through the origin.
Mesh l_shape_mesh();

// Smooth plate: u = 1e12 x^10 (1-x)^10 y^10 (1-y)^10 on the unit square.
namespace example1 {
inline constexpr double kStripLo = 0.75;
inline constexpr double kStripHi = 1.25;
inline constexpr double kStripArea = 7.0 / 16.0;

/// u as a polynomial expanded about (1/2, 1/2).
const BivariatePolynomial& u_poly();
/// f = bilaplacian of u, same expansion point.
const BivariatePolynomial& f_poly();
double u(Point p);
Vec2 gradient(Point p);
Sym2 hessian(Point p);
/// int over the strip of u, by Gauss rules exact for the polynomial on each x-interval.
double goal_exact();
}  // namespace example1

// Corner singularity on the L-shape.
namespace example2 {
inline constexpr double kAlpha = 0.5444837367;
inline constexpr double kOmega = 1.5 * std::numbers::pi;
inline constexpr double kRadius = 0.25;
inline constexpr double kDiskArea = 0.75 * std::numbers::pi * kRadius * kRadius;

/// Polar angle in [0, 3 pi / 2] (the third quadrant is mapped past pi).
double polar_angle(Point p);
double g(double theta, double alpha = kAlpha, double omega = kOmega);
double u(Point p, double alpha = kAlpha, double omega = kOmega);

/// Taylor jet of u (or of the pure singular part r^(1+alpha) g(theta) when cutoff = false).
Jet4 u_jet(Point p, bool cutoff = true, double alpha = kAlpha, double omega = kOmega);

struct Sample {
  double u = 0.0;
  double f = 0.0;
};
/// u and f = bilaplacian u at a point other than the origin.
Sample singular_u_and_f(Point p, double alpha = kAlpha, double omega = kOmega);

/// int over the disk part of u, by graded Gauss quadrature in polar coordinates.
double goal_polar(int n_radial = 48, int n_angular = 64);
}  // namespace example2

/// int over omega of v via the goal weight's clipped quadrature on a mesh.
double goal_on_mesh(const Mesh& mesh, const GoalWeight& weight, const std::function<double(Point)>& v);

struct Problem {
  std::string id;
  Mesh initial_mesh;
  std::shared_ptr<const Density> load;
  std::shared_ptr<const GoalWeight> goal;
  std::function<double(Point)> exact;
  std::function<double(Point)> f;
  /// Independently computed int_omega u.
  double q_ref = 0.0;
};

/// "example_1" or "example_2"; throws UnknownProblem otherwise.
Problem make_problem(const std::string& id);

/// Tabulated reference values of the goal functional.
double reference_goal(const std::string& id);

}  // namespace plategoal
