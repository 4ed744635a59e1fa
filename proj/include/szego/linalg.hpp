#pragma once

#include <vector>

#include "szego/dense_operator.hpp"

namespace szego {

/// LU factorization with partial pivoting, kept for reuse by determinant
/// and solves.
class LuFactorization {
 public:
  explicit LuFactorization(const DenseOperator& a);

  int size() const { return n_; }
  bool singular() const { return singular_; }

  /// log|det| and accumulated argument; safe for any matrix size.
  double log_abs_det() const { return log_abs_det_; }
  double arg_det() const { return arg_det_; }
  cplx det() const;

  /// Solves A x = b in place.
  void solve(std::vector<cplx>& b) const;
  /// Solves A* x = b in place (conjugate-transpose system, same factors).
  void solve_adjoint(std::vector<cplx>& b) const;
  DenseOperator solve(const DenseOperator& rhs) const;
  DenseOperator inverse() const;

 private:
  int n_ = 0;
  bool singular_ = false;
  double log_abs_det_ = 0.0;
  double arg_det_ = 0.0;
  std::vector<cplx> lu_;
  std::vector<int> piv_;
};

/// Determinant by pivoted elimination. Sections with side above
/// kLogFormThreshold should use log_determinant to avoid overflow.
cplx determinant(const DenseOperator& a);

constexpr int kLogFormThreshold = 2000;

struct LogDet {
  double log_abs;
  double arg;
  cplx value() const;  // exp(log_abs + i arg); may overflow for large logs
};

LogDet log_determinant(const DenseOperator& a);

/// Singular values by one-sided (Hestenes) Jacobi iteration, descending.
std::vector<double> singular_values(const DenseOperator& a);

struct SchattenReport {
  double trace_norm = 0.0;           // p = 1
  double hilbert_schmidt_norm = 0.0; // p = 2
  double operator_norm = 0.0;        // p = infinity
  std::vector<double> values;        // nonincreasing
};

SchattenReport schatten_norm(const DenseOperator& a);

/// Smallest singular value by inverse power iteration with LU solves;
/// stops early once the estimate settles.
double smallest_singular_value(const DenseOperator& a, int iterations = 200);

/// Inverse of a small matrix (symbol coefficient blocks).
DenseOperator inverse(const DenseOperator& a);

}  // namespace szego
