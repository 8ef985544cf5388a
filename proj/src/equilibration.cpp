#include "plategoal/equilibration.hpp"

#include <algorithm>
#include <cmath>

#include "plategoal/assembly.hpp"
#include "plategoal/quadrature.hpp"

namespace plategoal {

namespace {

constexpr std::array<Sym2, 3> kTestTensors{Sym2{1.0, 0.0, 0.0}, Sym2{0.0, 0.0, 1.0}, Sym2{0.0, 1.0, 0.0}};

// nn-trace of s on edge e at parameter s along tau, read from the plus side.
double nn_trace(const Mesh& mesh, const MomentTensor& s, const EdgeFrame& f, int side, double par) {
  const int t = side == 0 ? f.plus_triangle : f.minus_triangle;
  const Point x = f.a + (f.b - f.a) * par;
  return s.eval(t, mesh.geometry(t).barycentric(x)).nn(f.n);
}

}  // namespace

MomentTensor build_equilibrated_tensor(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u,
                                       double sigma) {
  std::vector<double> edge_dofs(2 * mesh.num_edges());
  // jump of du/dn at the two endpoints of every edge, in frame order (a, b)
  std::vector<std::array<double, 2>> jump_end(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeFrame f = mesh.edge_frame(e);
    const EdgeTrace ta = p2_edge_trace(mesh, dofs, u, e, 0.0);
    const EdgeTrace tb = p2_edge_trace(mesh, dofs, u, e, 1.0);
    jump_end[e] = {ta.jump_dn, tb.jump_dn};
    const double ga = ta.avg_hnn - sigma / f.h * ta.jump_dn;
    const double gb = tb.avg_hnn - sigma / f.h * tb.jump_dn;
    // Global moments run from the lower vertex index.
    const bool a_is_low = f.a == mesh.vertex(mesh.edge(e).v[0]);
    const auto m = a_is_low ? linear_edge_moments(ga, gb) : linear_edge_moments(gb, ga);
    edge_dofs[2 * e] = m[0];
    edge_dofs[2 * e + 1] = m[1];
  }

  std::vector<double> cell_dofs(3 * mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const Sym2 H = eval_p2(g, dofs.local(u, t), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).hessian;
    for (int c = 0; c < 3; ++c) {
      double integral = g.area * ddot(H, kTestTensors[c]);
      for (int j = 0; j < 3; ++j) {
        const int e = mesh.triangle_edge(t, j);
        const EdgeFrame f = mesh.edge_frame(e);
        const double gamma = mesh.boundary_edge(e) ? 1.0 : 0.5;
        // the jump is linear along the edge: exact mean of its end values
        const double jump_integral = 0.5 * (jump_end[e][0] + jump_end[e][1]) * f.h;
        integral -= gamma * jump_integral * kTestTensors[c].nn(f.n);
      }
      cell_dofs[3 * t + c] = integral / g.area;
    }
  }
  return MomentTensor(mesh, std::move(edge_dofs), std::move(cell_dofs));
}

std::vector<double> divdiv_pairing(const Mesh& mesh, const P2DofMap& dofs, const MomentTensor& s,
                                   std::vector<double>* magnitude) {
  std::vector<double> B(dofs.num_dofs(), 0.0);
  if (magnitude) magnitude->assign(dofs.num_dofs(), 0.0);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const auto h = p2_basis_hessians(g);
    const Sym2 mean = s.eval(t, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    for (int k = 0; k < 6; ++k) {
      const double c = g.area * ddot(mean, h[k]);
      B[dofs.dof(t, k)] += c;
      if (magnitude) (*magnitude)[dofs.dof(t, k)] += std::abs(c);
    }
  }
  const EdgeRule& rule = edge_rule(2);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeFrame f = mesh.edge_frame(e);
    const Edge& edge = mesh.edge(e);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double snn = nn_trace(mesh, s, f, 0, rule.points[q]);
      const Point x = f.a + (f.b - f.a) * rule.points[q];
      const double w = rule.weights[q] * f.h;
      for (int side = 0; side < (edge.boundary() ? 1 : 2); ++side) {
        const int t = edge.tri[side];
        const TriangleGeometry g = mesh.geometry(t);
        const auto grad = p2_basis_gradients(g, g.barycentric(x));
        const double sign = side == 0 ? 1.0 : -1.0;
        for (int k = 0; k < 6; ++k) {
          const double c = w * snn * sign * dot(grad[k], f.n);
          B[dofs.dof(t, k)] -= c;
          if (magnitude) (*magnitude)[dofs.dof(t, k)] += std::abs(c);
        }
      }
    }
  }
  return B;
}

double verify_equilibrium(const Mesh& mesh, const P2DofMap& dofs, const MomentTensor& s,
                          const std::vector<double>& load) {
  std::vector<double> mag;
  const std::vector<double> B = divdiv_pairing(mesh, dofs, s, &mag);
  double worst = 0.0, scale = 0.0;
  for (int d : dofs.free_dofs()) {
    worst = std::max(worst, std::abs(B[d] - load[d]));
    scale = std::max(scale, std::abs(load[d]) + mag[d]);
  }
  return scale > 0.0 ? worst / scale : worst;
}

double nn_trace_mismatch(const Mesh& mesh, const MomentTensor& s) {
  const EdgeRule& rule = edge_rule(3);
  double worst = 0.0;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (mesh.boundary_edge(e)) continue;
    const EdgeFrame f = mesh.edge_frame(e);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      worst = std::max(worst, std::abs(nn_trace(mesh, s, f, 0, rule.points[q]) -
                                       nn_trace(mesh, s, f, 1, rule.points[q])));
    }
  }
  return worst;
}

ElementNorm tensor_minus_hessian_norm(const Mesh& mesh, const P2DofMap& dofs, const MomentTensor& s,
                                      const std::vector<double>& u) {
  ElementNorm r;
  r.element_sq.resize(mesh.num_triangles());
  const QuadratureRule& rule = triangle_rule(2);
  double sum = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const Sym2 H = eval_p2(g, dofs.local(u, t), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).hessian;
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Sym2 d = s.eval(t, rule.points[q]) - H;
      acc += rule.weights[q] * ddot(d, d);
    }
    r.element_sq[t] = acc * 2.0 * g.area;
    sum += r.element_sq[t];
  }
  r.total = std::sqrt(sum);
  return r;
}

}  // namespace plategoal
