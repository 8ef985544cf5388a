#include "plategoal/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace plategoal {

HctFunction enrich(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& v) {
  HctFunction s = HctFunction::zeros(mesh);
  std::vector<int> vcount(mesh.num_vertices(), 0);
  std::vector<int> ecount(mesh.num_edges(), 0);
  // Ascending element order fixes the summation order of every patch mean.
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const P2Local c = dofs.local(v, t);
    const Triangle& tr = mesh.triangle(t);
    for (int i = 0; i < 3; ++i) {
      const int vi = tr[i];
      if (mesh.boundary_vertex(vi)) continue;
      Bary l{0.0, 0.0, 0.0};
      l[i] = 1.0;
      const P2Eval ev = eval_p2(g, c, l, 1);
      s.value[vi] += ev.value;
      s.gradient[vi] += ev.gradient;
      ++vcount[vi];
    }
    for (int j = 0; j < 3; ++j) {
      const int e = mesh.triangle_edge(t, j);
      if (mesh.boundary_edge(e)) continue;
      Bary l{0.5, 0.5, 0.5};
      l[j] = 0.0;
      const Vec2 n = mesh.edge_frame(e).n;
      s.normal_derivative[e] += dot(eval_p2(g, c, l, 1).gradient, n);
      ++ecount[e];
    }
  }
  for (int vi = 0; vi < mesh.num_vertices(); ++vi) {
    if (vcount[vi] == 0) continue;
    s.value[vi] /= vcount[vi];
    s.gradient[vi] = s.gradient[vi] / static_cast<double>(vcount[vi]);
  }
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (ecount[e] > 0) s.normal_derivative[e] /= ecount[e];
  }
  return s;
}

std::array<TriangleGeometry, 3> hct_subtriangles(const TriangleGeometry& g) {
  const Point c = g.centroid();
  return {TriangleGeometry(g.p[1], g.p[2], c), TriangleGeometry(g.p[2], g.p[0], c),
          TriangleGeometry(g.p[0], g.p[1], c)};
}

GoalTerm nonconformity_goal_term(const Mesh& mesh, const P2DofMap& dofs, const HctFunction& s,
                                 const std::vector<double>& v, const Density& weight) {
  GoalTerm r;
  r.element_signed.resize(mesh.num_triangles());
  r.element_abs.resize(mesh.num_triangles());
  std::vector<DensityPoint> pts;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const HctElement el(g, s.local(mesh, t));
    const P2Local c = dofs.local(v, t);
    const auto subs = hct_subtriangles(g);
    double acc = 0.0;
    for (int k = 0; k < 3; ++k) {
      pts.clear();
      weight.sample(subs[k], pts);
      for (const DensityPoint& p : pts) {
        const Bary l = g.barycentric(p.x);
        const double diff = el.eval_sub(k, l, 0).value - eval_p2(g, c, l, 0).value;
        acc += p.weight * p.value * diff;
      }
    }
    r.element_signed[t] = acc;
    r.element_abs[t] = std::abs(acc);
    r.global += acc;
  }
  return r;
}

C1Mismatch c1_mismatch(const Mesh& mesh, const HctFunction& s, int points_per_edge) {
  C1Mismatch m;
  std::vector<HctElement> els = hct_elements(mesh, s);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (mesh.boundary_edge(e)) continue;
    const EdgeFrame f = mesh.edge_frame(e);
    for (int q = 0; q < points_per_edge; ++q) {
      const double par = (q + 1.0) / (points_per_edge + 1.0);
      const Point x = f.a + (f.b - f.a) * par;
      const int tp = f.plus_triangle, tm = f.minus_triangle;
      const HctEval ep = els[tp].eval(els[tp].geometry().barycentric(x), 1);
      const HctEval em = els[tm].eval(els[tm].geometry().barycentric(x), 1);
      m.value = std::max(m.value, std::abs(ep.value - em.value));
      m.gradient = std::max(m.gradient, norm(ep.gradient - em.gradient));
    }
  }
  return m;
}

}  // namespace plategoal
