#include "plategoal/hhj.hpp"

#include <Eigen/Dense>
#include <cassert>

namespace plategoal {

namespace {

constexpr std::array<Sym2, 3> kBasisTensors{Sym2{1.0, 0.0, 0.0}, Sym2{0.0, 0.0, 1.0},
                                            Sym2{0.0, 1.0, 0.0}};

}  // namespace

HhjElement::HhjElement(const TriangleGeometry& g) : g_(g) {
  // Basis function (i, c) = lambda_i E_c, column 3 i + c.
  Eigen::Matrix<double, 9, 9> M = Eigen::Matrix<double, 9, 9>::Zero();
  for (int j = 0; j < 3; ++j) {
    const int ja = (j + 1) % 3, jb = (j + 2) % 3;
    const Vec2 e = g.p[jb] - g.p[ja];
    const Vec2 n = Vec2{e.y, -e.x} / norm(e);
    for (int c = 0; c < 3; ++c) {
      const double enn = kBasisTensors[c].nn(n);
      // lambda_ja = 1 - s, lambda_jb = s on side j
      M(2 * j, 3 * ja + c) = enn / 3.0;
      M(2 * j, 3 * jb + c) = enn / 6.0;
      M(2 * j + 1, 3 * ja + c) = enn / 6.0;
      M(2 * j + 1, 3 * jb + c) = enn / 3.0;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < 3; ++c) {
      for (int d = 0; d < 3; ++d) M(6 + d, 3 * i + c) = ddot(kBasisTensors[c], kBasisTensors[d]) / 3.0;
    }
  }
  Eigen::FullPivLU<Eigen::Matrix<double, 9, 9>> lu(M);
  assert(lu.isInvertible());
  const Eigen::Matrix<double, 9, 9> Minv = lu.inverse();
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      dof_matrix_[a][b] = M(a, b);
      inverse_[a][b] = Minv(a, b);
    }
  }
  const Eigen::JacobiSVD<Eigen::Matrix<double, 9, 9>> svd(M);
  cond_ = svd.singularValues()(0) / svd.singularValues()(8);
}

std::array<Sym2, 3> HhjElement::vertex_values(const HhjLocal& dofs) const {
  std::array<Sym2, 3> v{};
  for (int i = 0; i < 3; ++i) {
    double coef[3] = {0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c) {
      for (int a = 0; a < 9; ++a) coef[c] += inverse_[3 * i + c][a] * dofs[a];
    }
    v[i] = Sym2{coef[0], coef[2], coef[1]};
  }
  return v;
}

HhjLocal HhjElement::dofs_of(const std::array<Sym2, 3>& vertex_values) const {
  HhjLocal d{};
  for (int a = 0; a < 9; ++a) {
    for (int i = 0; i < 3; ++i) {
      const double coef[3] = {vertex_values[i].xx, vertex_values[i].yy, vertex_values[i].xy};
      for (int c = 0; c < 3; ++c) d[a] += dof_matrix_[a][3 * i + c] * coef[c];
    }
  }
  return d;
}

Sym2 eval_hhj(const TriangleGeometry& g, const HhjLocal& dofs, const Bary& l) {
  return eval_p1_tensor(HhjElement(g).vertex_values(dofs), l);
}

MomentTensor::MomentTensor(const Mesh& mesh, std::vector<double> edge_dofs, std::vector<double> cell_dofs)
    : edge_dofs_(std::move(edge_dofs)), cell_dofs_(std::move(cell_dofs)) {
  const int nt = mesh.num_triangles();
  local_.resize(nt);
  values_.resize(nt);
  for (int t = 0; t < nt; ++t) {
    const Triangle& tr = mesh.triangle(t);
    HhjLocal d{};
    for (int j = 0; j < 3; ++j) {
      const int e = mesh.triangle_edge(t, j);
      // Global moments run from the lower vertex; swap when the local side runs the other way.
      const bool forward = tr[(j + 1) % 3] < tr[(j + 2) % 3];
      d[2 * j] = edge_dofs_[2 * e + (forward ? 0 : 1)];
      d[2 * j + 1] = edge_dofs_[2 * e + (forward ? 1 : 0)];
    }
    for (int c = 0; c < 3; ++c) d[6 + c] = cell_dofs_[3 * t + c];
    local_[t] = d;
    values_[t] = HhjElement(mesh.geometry(t)).vertex_values(d);
  }
}

}  // namespace plategoal
