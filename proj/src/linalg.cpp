#include "szego/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

LuFactorization::LuFactorization(const DenseOperator& a) {
  if (!a.square()) throw NumericalError("lu: matrix not square");
  n_ = a.rows();
  lu_ = a.data();
  piv_.resize(std::size_t(n_));
  double sign_flips = 0.0;
  auto at = [this](int i, int j) -> cplx& {
    return lu_[std::size_t(i) * n_ + j];
  };
  for (int k = 0; k < n_; ++k) {
    int p = k;
    double best = std::abs(at(k, k));
    for (int i = k + 1; i < n_; ++i) {
      double v = std::abs(at(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv_[std::size_t(k)] = p;
    if (p != k) {
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign_flips += 1.0;
    }
    const cplx pivot = at(k, k);
    if (pivot == cplx(0.0, 0.0)) {
      singular_ = true;
      log_abs_det_ = -std::numeric_limits<double>::infinity();
      continue;
    }
    log_abs_det_ += std::log(std::abs(pivot));
    arg_det_ += std::arg(pivot);
    const cplx inv_pivot = 1.0 / pivot;
    for (int i = k + 1; i < n_; ++i) {
      const cplx l = at(i, k) * inv_pivot;
      at(i, k) = l;
      if (l == cplx(0.0, 0.0)) continue;
      cplx* ri = &at(i, 0);
      const cplx* rk = &at(k, 0);
      for (int j = k + 1; j < n_; ++j) ri[j] -= l * rk[j];
    }
  }
  if (std::fmod(sign_flips, 2.0) != 0.0) arg_det_ += kPi;
}

cplx LuFactorization::det() const {
  if (singular_) return 0.0;
  return std::exp(cplx(log_abs_det_, 0.0)) *
         cplx(std::cos(arg_det_), std::sin(arg_det_));
}

void LuFactorization::solve(std::vector<cplx>& b) const {
  if (singular_) throw NumericalError("lu solve: singular matrix");
  if (int(b.size()) != n_) throw NumericalError("lu solve: size mismatch");
  for (int k = 0; k < n_; ++k)
    if (piv_[std::size_t(k)] != k) std::swap(b[k], b[std::size_t(piv_[std::size_t(k)])]);
  for (int i = 1; i < n_; ++i) {
    cplx s = b[std::size_t(i)];
    const cplx* ri = &lu_[std::size_t(i) * n_];
    for (int j = 0; j < i; ++j) s -= ri[j] * b[std::size_t(j)];
    b[std::size_t(i)] = s;
  }
  for (int i = n_ - 1; i >= 0; --i) {
    cplx s = b[std::size_t(i)];
    const cplx* ri = &lu_[std::size_t(i) * n_];
    for (int j = i + 1; j < n_; ++j) s -= ri[j] * b[std::size_t(j)];
    b[std::size_t(i)] = s / ri[i];
  }
}

void LuFactorization::solve_adjoint(std::vector<cplx>& b) const {
  if (singular_) throw NumericalError("lu solve: singular matrix");
  if (int(b.size()) != n_) throw NumericalError("lu solve: size mismatch");
  // A = P^T L U, so A* x = b means U* L* P x = b.
  for (int i = 0; i < n_; ++i) {
    cplx s = b[std::size_t(i)];
    for (int j = 0; j < i; ++j)
      s -= std::conj(lu_[std::size_t(j) * n_ + i]) * b[std::size_t(j)];
    b[std::size_t(i)] = s / std::conj(lu_[std::size_t(i) * n_ + i]);
  }
  for (int i = n_ - 1; i >= 0; --i) {
    cplx s = b[std::size_t(i)];
    for (int j = i + 1; j < n_; ++j)
      s -= std::conj(lu_[std::size_t(j) * n_ + i]) * b[std::size_t(j)];
    b[std::size_t(i)] = s;
  }
  for (int k = n_ - 1; k >= 0; --k)
    if (piv_[std::size_t(k)] != k) std::swap(b[std::size_t(k)], b[std::size_t(piv_[std::size_t(k)])]);
}

DenseOperator LuFactorization::solve(const DenseOperator& rhs) const {
  if (rhs.rows() != n_) throw NumericalError("lu solve: rhs rows mismatch");
  DenseOperator out(rhs.rows(), rhs.cols());
  std::vector<cplx> col(static_cast<std::size_t>(n_));
  for (int j = 0; j < rhs.cols(); ++j) {
    for (int i = 0; i < n_; ++i) col[std::size_t(i)] = rhs(i, j);
    solve(col);
    for (int i = 0; i < n_; ++i) out(i, j) = col[std::size_t(i)];
  }
  return out;
}

DenseOperator LuFactorization::inverse() const {
  return solve(DenseOperator::identity(n_));
}

cplx determinant(const DenseOperator& a) {
  LuFactorization lu(a);
  return lu.det();
}

cplx LogDet::value() const {
  return std::exp(log_abs) * cplx(std::cos(arg), std::sin(arg));
}

LogDet log_determinant(const DenseOperator& a) {
  LuFactorization lu(a);
  return {lu.log_abs_det(), lu.arg_det()};
}

std::vector<double> singular_values(const DenseOperator& a) {
  // One-sided Jacobi on columns; work on the taller orientation.
  const bool transposed = a.rows() < a.cols();
  const int m = transposed ? a.cols() : a.rows();
  const int n = transposed ? a.rows() : a.cols();
  // Column-major working copy.
  std::vector<cplx> col(std::size_t(m) * std::size_t(n));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (transposed)
        col[std::size_t(i) * m + j] = a(i, j);
      else
        col[std::size_t(j) * m + i] = a(i, j);
    }
  const double tol = 1e-15;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cplx* cp = &col[std::size_t(p) * m];
        cplx* cq = &col[std::size_t(q) * m];
        double app = 0.0, aqq = 0.0;
        cplx apq = 0.0;
        for (int i = 0; i < m; ++i) {
          app += std::norm(cp[i]);
          aqq += std::norm(cq[i]);
          apq += std::conj(cp[i]) * cq[i];
        }
        const double off = std::abs(apq);
        if (off <= tol * std::sqrt(app * aqq) || off == 0.0) continue;
        rotated = true;
        // Phase-rotate column q so the coupling <p, phase q> = |apq| is
        // real, then apply the classic two-by-two Jacobi rotation.
        const cplx phase = std::conj(apq) / off;
        const double zeta = (aqq - app) / (2.0 * off);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < m; ++i) {
          const cplx vq = phase * cq[i];
          const cplx vp = cp[i];
          cp[i] = c * vp - s * vq;
          cq[i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    const cplx* cj = &col[std::size_t(j) * m];
    for (int i = 0; i < m; ++i) sum += std::norm(cj[i]);
    sv[std::size_t(j)] = std::sqrt(sum);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

SchattenReport schatten_norm(const DenseOperator& a) {
  SchattenReport rep;
  rep.values = singular_values(a);
  double sum1 = 0.0, sum2 = 0.0;
  for (double s : rep.values) {
    sum1 += s;
    sum2 += s * s;
  }
  rep.trace_norm = sum1;
  rep.hilbert_schmidt_norm = std::sqrt(sum2);
  rep.operator_norm = rep.values.empty() ? 0.0 : rep.values.front();
  return rep;
}

double smallest_singular_value(const DenseOperator& a, int iterations) {
  if (!a.square()) throw NumericalError("smallest_singular_value: not square");
  const int n = a.rows();
  LuFactorization lu(a);
  if (lu.singular()) return 0.0;
  // Power iteration on (A A^*)^{-1}; growth rate gives 1/sigma_min^2.
  std::vector<cplx> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[std::size_t(i)] = cplx(1.0 / std::sqrt(double(n)), 0.0);
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    lu.solve(x);
    lu.solve_adjoint(x);
    double norm = 0.0;
    for (const auto& z : x) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    const double next = 1.0 / std::sqrt(norm);
    const bool converged = it > 2 && std::abs(next - sigma) <= 1e-13 * next;
    sigma = next;
    for (auto& z : x) z /= norm;
    if (converged) break;
  }
  return sigma;
}

DenseOperator inverse(const DenseOperator& a) {
  LuFactorization lu(a);
  if (lu.singular()) throw NumericalError("inverse: singular matrix");
  return lu.inverse();
}

}  // namespace szego
