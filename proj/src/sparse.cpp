#include "plategoal/sparse.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <limits>
#include <cmath>

#include "plategoal/simd.hpp"

namespace plategoal {

SparseSpdMatrix SparseSpdMatrix::from_triplets(int n, std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
      throw std::out_of_range("triplet index out of range");
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseSpdMatrix A;
  A.n_ = n;
  A.row_ptr_.assign(n + 1, 0);
  for (std::size_t k = 0; k < triplets.size();) {
    std::size_t j = k;
    double s = 0.0;
    while (j < triplets.size() && triplets[j].row == triplets[k].row && triplets[j].col == triplets[k].col) {
      s += triplets[j].value;
      ++j;
    }
    A.col_.push_back(triplets[k].col);
    A.val_.push_back(s);
    ++A.row_ptr_[triplets[k].row + 1];
    k = j;
  }
  for (int i = 0; i < n; ++i) A.row_ptr_[i + 1] += A.row_ptr_[i];
  return A;
}

SparseSpdMatrix SparseSpdMatrix::identity(int n) {
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i) t.push_back({i, i, 1.0});
  return from_triplets(n, std::move(t));
}

double SparseSpdMatrix::entry(int i, int j) const {
  const auto first = col_.begin() + row_ptr_[i];
  const auto last = col_.begin() + row_ptr_[i + 1];
  const auto it = std::lower_bound(first, last, j);
  return (it != last && *it == j) ? val_[it - col_.begin()] : 0.0;
}

std::vector<double> SparseSpdMatrix::diagonal() const {
  std::vector<double> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = entry(i, i);
  return d;
}

void SparseSpdMatrix::multiply(const double* x, double* y) const {
  simd::active().spmv(n_, row_ptr_.data(), col_.data(), val_.data(), x, y);
}

std::vector<double> SparseSpdMatrix::operator*(const std::vector<double>& x) const {
  std::vector<double> y(n_);
  multiply(x.data(), y.data());
  return y;
}

double SparseSpdMatrix::max_abs() const {
  double m = 0.0;
  for (double v : val_) m = std::max(m, std::abs(v));
  return m;
}

double SparseSpdMatrix::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) m = std::max(m, std::abs(val_[k] - entry(col_[k], i)));
  }
  return m;
}

namespace {

double norm2(const std::vector<double>& v) {
  const auto& k = simd::active();
  return std::sqrt(k.dot(v.data(), v.data(), v.size()));
}

}  // namespace

double relative_residual(const SparseSpdMatrix& A, const std::vector<double>& x, const std::vector<double>& b) {
  std::vector<double> r = A * x;
  simd::active().axpy(-1.0, b.data(), r.data(), r.size());
  const double nb = norm2(b);
  const double nr = norm2(r);
  return nb > 0.0 ? nr / nb : nr;
}

double roundoff_floor(const SparseSpdMatrix& A, const std::vector<double>& x, const std::vector<double>& b) {
  const auto& rp = A.row_ptr();
  const auto& col = A.col();
  const auto& val = A.values();
  double acc = 0.0;
  for (int i = 0; i < A.size(); ++i) {
    double m = std::abs(b[i]);
    for (int k = rp[i]; k < rp[i + 1]; ++k) m += std::abs(val[k] * x[col[k]]);
    acc += m * m;
  }
  const double nb = norm2(b);
  const double scale = std::sqrt(acc) * 32.0 * std::numeric_limits<double>::epsilon();
  return nb > 0.0 ? scale / nb : scale;
}

struct SpdSolver::Factor {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
};

SpdSolver::SpdSolver(const SparseSpdMatrix& A, SolverOptions options) : A_(A), opt_(options) {
  if (opt_.kind != SolverKind::direct) return;
  Eigen::SparseMatrix<double> M(A.size(), A.size());
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(A.nonzeros());
  for (int i = 0; i < A.size(); ++i) {
    for (int k = A.row_ptr()[i]; k < A.row_ptr()[i + 1]; ++k) t.emplace_back(i, A.col()[k], A.values()[k]);
  }
  M.setFromTriplets(t.begin(), t.end());
  factor_ = std::make_unique<Factor>();
  factor_->ldlt.compute(M);
  if (factor_->ldlt.info() != Eigen::Success) throw SolverError("sparse LDL^T factorisation failed");
  if (A.size() > 0 && factor_->ldlt.vectorD().minCoeff() <= 0.0) {
    throw SolverError("matrix is not positive definite (non-positive pivot)");
  }
}

SpdSolver::~SpdSolver() = default;

std::vector<double> SpdSolver::solve(const std::vector<double>& b, SolveStats* stats) const {
  const int n = A_.size();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve: right-hand side size mismatch");
  if (std::all_of(b.begin(), b.end(), [](double v) { return v == 0.0; })) {
    if (stats) *stats = {};
    return std::vector<double>(n, 0.0);
  }
  if (opt_.kind == SolverKind::cg) {
    const int cap = opt_.max_iterations > 0 ? opt_.max_iterations
                                            : static_cast<int>(std::ceil(50.0 * std::sqrt(std::max(n, 1))));
    return pcg_solve(A_, b, opt_.rel_tol, cap, stats);
  }
  const Eigen::Map<const Eigen::VectorXd> bv(b.data(), n);
  Eigen::VectorXd x = factor_->ldlt.solve(bv);
  std::vector<double> xs(x.data(), x.data() + n);
  double res = relative_residual(A_, xs, b);
  const double floor = roundoff_floor(A_, xs, b);
  const double target = std::max(opt_.rel_tol, floor);
  int steps = 0;
  // A few sweeps of iterative refinement recover digits lost to pivot growth.
  while (res > 0.01 * target && res > floor && steps < 4) {
    std::vector<double> r = A_ * xs;
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
    const Eigen::Map<const Eigen::VectorXd> rv(r.data(), n);
    const Eigen::VectorXd dx = factor_->ldlt.solve(rv);
    for (int i = 0; i < n; ++i) xs[i] += dx[i];
    res = relative_residual(A_, xs, b);
    ++steps;
  }
  if (stats) *stats = {steps, res, floor};
  if (!(res <= target)) {
    throw SolverError("direct solve residual " + std::to_string(res) + " above tolerance");
  }
  return xs;
}

std::vector<double> solve(const SparseSpdMatrix& A, const std::vector<double>& b, double rel_tol) {
  SolverOptions opt;
  opt.rel_tol = rel_tol;
  return SpdSolver(A, opt).solve(b);
}

std::vector<double> pcg_solve(const SparseSpdMatrix& A, const std::vector<double>& b, double rel_tol,
                              int max_iterations, SolveStats* stats) {
  const auto& k = simd::active();
  const std::size_t n = A.size();
  std::vector<double> x(n, 0.0), r = b, z(n), p(n), q(n);
  const double nb = norm2(b);
  if (nb == 0.0) {
    if (stats) *stats = {};
    return x;
  }
  std::vector<double> dinv = A.diagonal();
  for (double& d : dinv) {
    if (!(d > 0.0)) throw SolverError("CG: non-positive diagonal entry");
    d = 1.0 / d;
  }
  for (std::size_t i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
  p = z;
  double rz = k.dot(r.data(), z.data(), n);
  for (int it = 1; it <= max_iterations; ++it) {
    A.multiply(p.data(), q.data());
    const double pq = k.dot(p.data(), q.data(), n);
    if (!(pq > 0.0)) throw SolverError("CG: matrix is not positive definite");
    const double alpha = rz / pq;
    k.axpy(alpha, p.data(), x.data(), n);
    k.axpy(-alpha, q.data(), r.data(), n);
    const double rel = norm2(r) / nb;
    if (rel <= rel_tol) {
      if (stats) *stats = {it, rel, 0.0};
      return x;
    }
    if (rel <= 1e4 * rel_tol && it % 8 == 0) {
      // The recursive residual can stall at rounding level; accept against the true residual.
      const double floor = roundoff_floor(A, x, b);
      const double true_rel = relative_residual(A, x, b);
      if (true_rel <= std::max(rel_tol, floor)) {
        if (stats) *stats = {it, true_rel, floor};
        return x;
      }
    }
    for (std::size_t i = 0; i < n; ++i) z[i] = dinv[i] * r[i];
    const double rz_new = k.dot(r.data(), z.data(), n);
    k.xpay(z.data(), rz_new / rz, p.data(), n);
    rz = rz_new;
  }
  throw SolverError("CG did not converge in " + std::to_string(max_iterations) + " iterations");
}

std::vector<double> dense_solve(const SparseSpdMatrix& A, const std::vector<double>& b) {
  const int n = A.size();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = A.row_ptr()[i]; k < A.row_ptr()[i + 1]; ++k) M(i, A.col()[k]) = A.values()[k];
  }
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success) throw SolverError("dense Cholesky failed: matrix not SPD");
  const Eigen::VectorXd x = llt.solve(Eigen::Map<const Eigen::VectorXd>(b.data(), n));
  return std::vector<double>(x.data(), x.data() + n);
}

}  // namespace plategoal
