#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace plategoal {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Triplet {
  int row;
  int col;
  double value;
};

/// Symmetric matrix in compressed-row layout (both triangles stored).
class SparseSpdMatrix {
 public:
  SparseSpdMatrix() = default;
  /// Duplicate entries are summed; column indices are sorted within each row.
  static SparseSpdMatrix from_triplets(int n, std::vector<Triplet> triplets);
  static SparseSpdMatrix identity(int n);

  int size() const { return n_; }
  std::size_t nonzeros() const { return val_.size(); }
  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col() const { return col_; }
  const std::vector<double>& values() const { return val_; }

  double entry(int i, int j) const;
  std::vector<double> diagonal() const;
  /// y = A x through the active SIMD kernels.
  void multiply(const double* x, double* y) const;
  std::vector<double> operator*(const std::vector<double>& x) const;

  double max_abs() const;
  /// max |A_ij - A_ji|
  double max_asymmetry() const;

 private:
  int n_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> col_;
  std::vector<double> val_;
};

enum class SolverKind { direct, cg };

struct SolverOptions {
  SolverKind kind = SolverKind::direct;
  double rel_tol = 1e-10;
  /// CG iteration cap; 0 selects 50 sqrt(n).
  int max_iterations = 0;
};

struct SolveStats {
  int iterations = 0;
  double relative_residual = 0.0;
  /// Smallest relative residual resolvable in double precision for this x (see roundoff_floor).
  double floor = 0.0;
};

/// Factor-once solver for several right-hand sides with the same matrix.
class SpdSolver {
 public:
  SpdSolver(const SparseSpdMatrix& A, SolverOptions options = {});
  ~SpdSolver();
  SpdSolver(const SpdSolver&) = delete;
  SpdSolver& operator=(const SpdSolver&) = delete;

  /// Throws SolverError when the tolerance cannot be reached.
  std::vector<double> solve(const std::vector<double>& b, SolveStats* stats = nullptr) const;

 private:
  struct Factor;
  const SparseSpdMatrix& A_;
  SolverOptions opt_;
  std::unique_ptr<Factor> factor_;
};

std::vector<double> solve(const SparseSpdMatrix& A, const std::vector<double>& b, double rel_tol = 1e-10);

/// Jacobi-preconditioned conjugate gradients.
std::vector<double> pcg_solve(const SparseSpdMatrix& A, const std::vector<double>& b, double rel_tol,
                              int max_iterations, SolveStats* stats = nullptr);

/// Dense Cholesky solve, for small systems and as a test oracle.
std::vector<double> dense_solve(const SparseSpdMatrix& A, const std::vector<double>& b);

/// 32 eps || |A||x| + |b| || / ||b||: below this the computed residual is rounding noise. A solve
/// is accepted once its relative residual reaches max(rel_tol, floor).
double roundoff_floor(const SparseSpdMatrix& A, const std::vector<double>& x, const std::vector<double>& b);

/// ||A x - b|| / ||b|| (0 when b = 0 and x = 0).
double relative_residual(const SparseSpdMatrix& A, const std::vector<double>& x, const std::vector<double>& b);

}  // namespace plategoal
