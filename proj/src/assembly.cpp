#include "plategoal/assembly.hpp"

#include <cmath>

#include "plategoal/quadrature.hpp"

namespace plategoal {

namespace {

// Local data of one edge: up to two adjacent elements with 6 DOFs each.
struct EdgeStencil {
  int count = 0;
  std::array<int, 12> dof{};
  std::array<double, 12> jump{};
  std::array<double, 12> avg{};
};

EdgeStencil edge_stencil(const Mesh& mesh, const P2DofMap& dofs, const EdgeFrame& f, int e, double s) {
  const Edge& edge = mesh.edge(e);
  const Point x = f.a + (f.b - f.a) * s;
  const bool boundary = edge.boundary();
  EdgeStencil st;
  for (int side = 0; side < (boundary ? 1 : 2); ++side) {
    const int t = edge.tri[side];
    const TriangleGeometry g = mesh.geometry(t);
    const Bary l = g.barycentric(x);
    const auto grad = p2_basis_gradients(g, l);
    const auto hess = p2_basis_hessians(g);
    const double sign = side == 0 ? 1.0 : -1.0;
    const double wavg = boundary ? 1.0 : 0.5;
    for (int k = 0; k < 6; ++k) {
      st.dof[st.count] = dofs.dof(t, k);
      st.jump[st.count] = sign * dot(grad[k], f.n);
      st.avg[st.count] = wavg * hess[k].nn(f.n);
      ++st.count;
    }
  }
  return st;
}

}  // namespace

SparseSpdMatrix assemble_aip(const Mesh& mesh, const P2DofMap& dofs, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("penalty parameter must be positive");
  std::vector<Triplet> trip;
  trip.reserve(36 * mesh.num_triangles() + 144 * mesh.num_edges());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const auto h = p2_basis_hessians(g);
    for (int a = 0; a < 6; ++a) {
      const int ia = dofs.free_index(dofs.dof(t, a));
      if (ia < 0) continue;
      for (int b = 0; b < 6; ++b) {
        const int ib = dofs.free_index(dofs.dof(t, b));
        if (ib < 0) continue;
        trip.push_back({ia, ib, g.area * ddot(h[a], h[b])});
      }
    }
  }
  const EdgeRule& rule = edge_rule(2);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeFrame f = mesh.edge_frame(e);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const EdgeStencil st = edge_stencil(mesh, dofs, f, e, rule.points[q]);
      const double w = rule.weights[q] * f.h;
      for (int a = 0; a < st.count; ++a) {
        const int ia = dofs.free_index(st.dof[a]);
        if (ia < 0) continue;
        for (int b = 0; b < st.count; ++b) {
          const int ib = dofs.free_index(st.dof[b]);
          if (ib < 0) continue;
          const double v = -st.jump[b] * st.avg[a] - st.avg[b] * st.jump[a] + sigma / f.h * st.jump[a] * st.jump[b];
          trip.push_back({ia, ib, w * v});
        }
      }
    }
  }
  return SparseSpdMatrix::from_triplets(dofs.num_free(), std::move(trip));
}

std::vector<double> assemble_load(const Mesh& mesh, const P2DofMap& dofs, const Density& f) {
  std::vector<double> F(dofs.num_dofs(), 0.0);
  std::vector<DensityPoint> pts;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    pts.clear();
    f.sample(g, pts);
    P2Local acc{};
    for (const DensityPoint& p : pts) {
      const auto phi = p2_basis(g.barycentric(p.x));
      const double wv = p.weight * p.value;
      for (int k = 0; k < 6; ++k) acc[k] += wv * phi[k];
    }
    for (int k = 0; k < 6; ++k) F[dofs.dof(t, k)] += acc[k];
  }
  return F;
}

EdgeTrace p2_edge_trace(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u, int e, double s) {
  const EdgeFrame f = mesh.edge_frame(e);
  const EdgeStencil st = edge_stencil(mesh, dofs, f, e, s);
  EdgeTrace tr;
  for (int k = 0; k < st.count; ++k) {
    tr.jump_dn += st.jump[k] * u[st.dof[k]];
    tr.avg_hnn += st.avg[k] * u[st.dof[k]];
  }
  return tr;
}

double aip_form(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u,
                const std::vector<double>& v, double sigma) {
  double s = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const Bary c{1.0 / 3, 1.0 / 3, 1.0 / 3};
    const Sym2 hu = eval_p2(g, dofs.local(u, t), c, 2).hessian;
    const Sym2 hv = eval_p2(g, dofs.local(v, t), c, 2).hessian;
    s += g.area * ddot(hu, hv);
  }
  const EdgeRule& rule = edge_rule(2);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const double h = mesh.edge_frame(e).h;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const EdgeTrace tu = p2_edge_trace(mesh, dofs, u, e, rule.points[q]);
      const EdgeTrace tv = p2_edge_trace(mesh, dofs, v, e, rule.points[q]);
      s += rule.weights[q] * h *
           (-tu.jump_dn * tv.avg_hnn - tu.avg_hnn * tv.jump_dn + sigma / h * tu.jump_dn * tv.jump_dn);
    }
  }
  return s;
}

double jump_penalty_sq(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u, double sigma) {
  const EdgeRule& rule = edge_rule(2);
  double s = 0.0;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const double h = mesh.edge_frame(e).h;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double j = p2_edge_trace(mesh, dofs, u, e, rule.points[q]).jump_dn;
      s += rule.weights[q] * h * sigma / h * j * j;
    }
  }
  return s;
}

double ip_norm(const Mesh& mesh, const P2DofMap& dofs, const std::vector<double>& u, double sigma) {
  double s = jump_penalty_sq(mesh, dofs, u, sigma);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriangleGeometry g = mesh.geometry(t);
    const Sym2 h = eval_p2(g, dofs.local(u, t), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).hessian;
    s += g.area * ddot(h, h);
  }
  return std::sqrt(s);
}

}  // namespace plategoal
