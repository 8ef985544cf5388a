#include "plategoal/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "plategoal/assembly.hpp"
#include "plategoal/quadrature.hpp"
#include "plategoal/reconstruction.hpp"

namespace plategoal {

namespace {

// Macro barycentrics of a point given in sub-triangle coordinates.
Bary sub_to_macro(int sub, const Bary& beta) {
  Bary l{beta[2] / 3.0, beta[2] / 3.0, beta[2] / 3.0};
  l[(sub + 1) % 3] += beta[0];
  l[(sub + 2) % 3] += beta[1];
  return l;
}

// Sum over the three sub-triangles of area * sum_q w_q integrand(sub, macro barycentric).
template <class F>
double integrate_subtriangles(const TriangleGeometry& g, int degree, F&& integrand) {
  const QuadratureRule& rule = triangle_rule(degree);
  double s = 0.0;
  for (int sub = 0; sub < 3; ++sub) {
    for (std::size_t q = 0; q < rule.size(); ++q) s += rule.weights[q] * integrand(sub, sub_to_macro(sub, rule.points[q]));
  }
  return s * 2.0 * g.area / 3.0;
}

}  // namespace

AverageMomentTensor::AverageMomentTensor(const Mesh& mesh, const MomentTensor& tensor, const HctFunction& s)
    : mesh_(&mesh), tensor_(&tensor), elements_(hct_elements(mesh, s)) {
  if (tensor.num_triangles() != mesh.num_triangles()) {
    throw std::invalid_argument("AverageMomentTensor: tensor and reconstruction live on different meshes");
  }
}

Sym2 AverageMomentTensor::eval(int t, int sub, const Bary& l) const {
  return (tensor_->eval(t, l) + elements_[t].eval_sub(sub, l, 2).hessian) * 0.5;
}

ElementSums hct_tensor_distance_sq(const Mesh& mesh, const MomentTensor& sigma, const HctFunction& s) {
  ElementSums r;
  r.element.resize(mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const HctElement el(g, s.local(mesh, t));
    r.element[t] = integrate_subtriangles(g, 4, [&](int sub, const Bary& l) {
      const Sym2 d = el.eval_sub(sub, l, 2).hessian - sigma.eval(t, l);
      return ddot(d, d);
    });
    r.total += r.element[t];
  }
  return r;
}

ElementSums goal_correction(const Mesh& mesh, const MomentTensor& sigma_eq, const HctFunction& s,
                            const AverageMomentTensor& sigma_m) {
  ElementSums r;
  r.element.resize(mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const HctElement el(g, s.local(mesh, t));
    r.element[t] = integrate_subtriangles(g, 4, [&](int sub, const Bary& l) {
      return ddot(sigma_eq.eval(t, l) - el.eval_sub(sub, l, 2).hessian, sigma_m.eval(t, sub, l));
    });
    r.total += r.element[t];
  }
  return r;
}

double abstract_goal_bound(double eta_h, double eta_tilde, double eta_nc) {
  if (eta_h < 0.0 || eta_tilde < 0.0 || eta_nc < 0.0) {
    throw std::invalid_argument("abstract_goal_bound: estimator contributions must be non-negative");
  }
  return 0.5 * eta_h * eta_tilde + eta_nc;
}

ElementSums residual_goal_estimator(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u,
                                    const MomentTensor& sigma_eq, const MomentTensor& sigma_dual) {
  ElementSums r;
  r.element.assign(mesh.num_triangles(), 0.0);
  const QuadratureRule& rule = triangle_rule(2);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const Sym2 H = eval_p2(g, dofs.local(u, t), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).hessian;
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      acc += rule.weights[q] * ddot(sigma_eq.eval(t, rule.points[q]) - H, sigma_dual.eval(t, rule.points[q]));
    }
    r.element[t] += acc * 2.0 * g.area;
  }
  const EdgeRule& er = edge_rule(2);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeFrame f = mesh.edge_frame(e);
    const TriangleGeometry gp = mesh.geometry(f.plus_triangle);
    double integral = 0.0;
    for (std::size_t q = 0; q < er.size(); ++q) {
      const double jump = p2_edge_trace(mesh, dofs, u, e, er.points[q]).jump_dn;
      const Point x = f.a + (f.b - f.a) * er.points[q];
      const double snn = sigma_dual.eval(f.plus_triangle, gp.barycentric(x)).nn(f.n);
      integral += er.weights[q] * f.h * jump * snn;
    }
    if (mesh.boundary_edge(e)) {
      r.element[f.plus_triangle] += integral;
    } else {
      r.element[f.plus_triangle] += 0.5 * integral;
      r.element[f.minus_triangle] += 0.5 * integral;
    }
  }
  for (double v : r.element) r.total += v;
  return r;
}

double oscillation_bound(const Mesh& mesh, const Density& f) {
  std::vector<DensityPoint> pts;
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    pts.clear();
    f.sample(g, pts);
    double l2 = 0.0;
    for (const DensityPoint& p : pts) l2 += p.weight * p.value * p.value;
    const double h = g.diameter();
    s += h * h * h * h * l2;
  }
  return kOscillationConstant * std::sqrt(s);
}

double load_pairing_defect(const Mesh& mesh, const Density& f, const MomentTensor& sigma, const HctFunction& s) {
  std::vector<DensityPoint> pts;
  double total = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const HctElement el(g, s.local(mesh, t));
    const auto subs = hct_subtriangles(g);
    for (int sub = 0; sub < 3; ++sub) {
      pts.clear();
      f.sample(subs[sub], pts);
      for (const DensityPoint& p : pts) total += p.weight * p.value * el.eval_sub(sub, g.barycentric(p.x), 0).value;
    }
    total -= integrate_subtriangles(g, 4, [&](int sub, const Bary& l) {
      return ddot(sigma.eval(t, l), el.eval_sub(sub, l, 2).hessian);
    });
  }
  return total;
}

void finalize_report(GoalReport& r) {
  r.q_h = r.q_uh + r.correction;
  r.eta_abs = abstract_goal_bound(r.eta_h, r.eta_tilde, r.eta_nc);
  r.e_goal.reset();
  r.signed_error.reset();
  r.eff_abs.reset();
  r.eff_res.reset();
  if (r.q_ref) {
    r.signed_error = *r.q_ref - r.q_h;
    r.e_goal = std::abs(*r.signed_error);
    if (*r.e_goal > 0.0) {
      r.eff_abs = r.eta_abs / *r.e_goal;
      r.eff_res = std::abs(r.eta_res) / *r.e_goal;
    }
  }
}

}  // namespace plategoal
