#include "plategoal/hct.hpp"

#include <stdexcept>

namespace plategoal {

namespace {

// Ordinate slot of multi-index (a, b, c), a + b + c = 3, ordered by a then b.
constexpr int slot(int a, int b) {
  // rows of a = 3, 2, 1, 0 hold 1, 2, 3, 4 entries
  constexpr int start[4] = {6, 3, 1, 0};
  return start[a] + (3 - a - b);
}

constexpr double fact(int n) { return n <= 1 ? 1.0 : n * fact(n - 1); }

double power(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Monomial sum over all multi-indices gamma of total degree d of
// (d! / gamma!) * b[gamma + shift] * beta^gamma.
double bezier_sum(const std::array<double, 10>& b, const Bary& beta, int d, int sa, int sb) {
  double s = 0.0;
  for (int a = 0; a <= d; ++a) {
    for (int bb = 0; a + bb <= d; ++bb) {
      const int c = d - a - bb;
      const double coef = fact(d) / (fact(a) * fact(bb) * fact(c));
      s += coef * b[slot(a + sa, bb + sb)] * power(beta[0], a) * power(beta[1], bb) * power(beta[2], c);
    }
  }
  return s;
}

}  // namespace

HctElement::HctElement(const TriangleGeometry& g, const HctLocal& dofs) : g_(g) {
  const Point c = g.centroid();
  std::array<double, 3> f{dofs[0], dofs[1], dofs[2]};
  std::array<Vec2, 3> grad{Vec2{dofs[3], dofs[4]}, Vec2{dofs[5], dofs[6]}, Vec2{dofs[7], dofs[8]}};
  std::array<double, 3> s{}, t{};
  for (int k = 0; k < 3; ++k) s[k] = f[k] + dot(grad[k], c - g.p[k]) / 3.0;

  for (int i = 0; i < 3; ++i) {
    const int ia = (i + 1) % 3, ib = (i + 2) % 3;
    dbeta_[i][0] = g.grad[ia] - g.grad[i];
    dbeta_[i][1] = g.grad[ib] - g.grad[i];
    dbeta_[i][2] = g.grad[i] * 3.0;

    auto& b = b_[i];
    const Point A = g.p[ia], B = g.p[ib];
    b[slot(3, 0)] = f[ia];
    b[slot(0, 3)] = f[ib];
    b[slot(2, 1)] = f[ia] + dot(grad[ia], B - A) / 3.0;
    b[slot(1, 2)] = f[ib] + dot(grad[ib], A - B) / 3.0;
    b[slot(2, 0)] = s[ia];
    b[slot(0, 2)] = s[ib];

    // Interior ordinate b111 from the normal derivative at the midpoint of side i.
    const Vec2 e = B - A;
    const Vec2 n = Vec2{e.y, -e.x} / norm(e);
    const double aA = dot(dbeta_[i][0], n), aB = dot(dbeta_[i][1], n), aC = dot(dbeta_[i][2], n);
    const double dA = 3.0 * (0.25 * b[slot(3, 0)] + 0.5 * b[slot(2, 1)] + 0.25 * b[slot(1, 2)]);
    const double dB = 3.0 * (0.25 * b[slot(2, 1)] + 0.5 * b[slot(1, 2)] + 0.25 * b[slot(0, 3)]);
    const double dC_rest = 3.0 * 0.25 * (b[slot(2, 0)] + b[slot(0, 2)]);
    t[i] = (dofs[9 + i] - aA * dA - aB * dB - aC * dC_rest) / (1.5 * aC);
    b[slot(1, 1)] = t[i];
  }

  // C1 across the internal sub-edges fixes the ordinates next to the centroid.
  std::array<double, 3> r{};
  for (int k = 0; k < 3; ++k) r[k] = (s[k] + t[(k + 1) % 3] + t[(k + 2) % 3]) / 3.0;
  const double bc = (r[0] + r[1] + r[2]) / 3.0;
  for (int i = 0; i < 3; ++i) {
    auto& b = b_[i];
    b[slot(1, 0)] = r[(i + 1) % 3];
    b[slot(0, 1)] = r[(i + 2) % 3];
    b[slot(0, 0)] = bc;
  }
}

int HctElement::locate(const Bary& l) {
  int sub = 0;
  if (l[1] < l[sub]) sub = 1;
  if (l[2] < l[sub]) sub = 2;
  return sub;
}

HctEval HctElement::eval_sub(int sub, const Bary& l, int order) const {
  const int ia = (sub + 1) % 3, ib = (sub + 2) % 3;
  const Bary beta{l[ia] - l[sub], l[ib] - l[sub], 3.0 * l[sub]};
  return eval_sub_local(sub, beta, order);
}

HctEval HctElement::eval_sub_local(int sub, const Bary& beta, int order) const {
  if (order < 0 || order > 2) throw std::invalid_argument("eval_hct: derivative order must be 0, 1 or 2");
  const auto& b = b_[sub];
  const auto& db = dbeta_[sub];
  HctEval r;
  r.value = bezier_sum(b, beta, 3, 0, 0);
  if (order >= 1) {
    const double d[3] = {3.0 * bezier_sum(b, beta, 2, 1, 0), 3.0 * bezier_sum(b, beta, 2, 0, 1),
                         3.0 * bezier_sum(b, beta, 2, 0, 0)};
    for (int m = 0; m < 3; ++m) r.gradient += db[m] * d[m];
  }
  if (order == 2) {
    // Second partials: 6 * sum over |gamma| = 1 of b[gamma + e_m + e_n] beta^gamma.
    const int e[3][2] = {{1, 0}, {0, 1}, {0, 0}};
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        const double dmn =
            6.0 * bezier_sum(b, beta, 1, e[m][0] + e[n][0], e[m][1] + e[n][1]);
        r.hessian += Sym2::sym_outer(db[m], db[n]) * dmn;
      }
    }
  }
  return r;
}

HctEval eval_hct(const TriangleGeometry& g, const HctLocal& dofs, Point x, int order) {
  const Bary l = g.barycentric(x);
  const double tol = -1e-12;
  if (l[0] < tol || l[1] < tol || l[2] < tol) throw std::domain_error("eval_hct: point outside the triangle");
  return HctElement(g, dofs).eval(l, order);
}

HctFunction HctFunction::zeros(const Mesh& mesh) {
  HctFunction f;
  f.value.assign(mesh.num_vertices(), 0.0);
  f.gradient.assign(mesh.num_vertices(), Vec2{});
  f.normal_derivative.assign(mesh.num_edges(), 0.0);
  return f;
}

HctLocal HctFunction::local(const Mesh& mesh, int t) const {
  const Triangle& tr = mesh.triangle(t);
  HctLocal d{};
  for (int k = 0; k < 3; ++k) {
    d[k] = value[tr[k]];
    d[3 + 2 * k] = gradient[tr[k]].x;
    d[4 + 2 * k] = gradient[tr[k]].y;
    d[9 + k] = mesh.edge_sign(t, k) * normal_derivative[mesh.triangle_edge(t, k)];
  }
  return d;
}

std::vector<HctElement> hct_elements(const Mesh& mesh, const HctFunction& f) {
  std::vector<HctElement> out;
  out.reserve(mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) out.emplace_back(mesh.geometry(t), f.local(mesh, t));
  return out;
}

}  // namespace plategoal
