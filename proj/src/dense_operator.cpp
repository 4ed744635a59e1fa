#include "szego/dense_operator.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

std::string to_string(OpLabel label) {
  switch (label) {
    case OpLabel::ToeplitzSection: return "toeplitz-section";
    case OpLabel::Hankel: return "hankel";
    case OpLabel::HankelReflected: return "hankel-reflected";
    case OpLabel::ProductTruncation: return "product-truncation";
    case OpLabel::Generic: return "generic";
  }
  return "generic";
}

DenseOperator DenseOperator::identity(int n) {
  DenseOperator id(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

cplx DenseOperator::trace() const {
  if (!square()) throw NumericalError("trace: matrix not square");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(cols_, rows_, label_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

DenseOperator DenseOperator::transpose() const {
  DenseOperator out(cols_, rows_, label_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw NumericalError("operator+=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw NumericalError("operator-=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseOperator& DenseOperator::operator*=(cplx scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

double DenseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

void DenseOperator::dump(std::ostream& out) const {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << fmt17((*this)(i, j));
    }
    out << '\n';
  }
}

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b) {
  if (a.cols() != b.rows()) throw NumericalError("matmul: shape mismatch");
  DenseOperator c(a.rows(), b.cols());
  // ikj order keeps the inner loop contiguous in both b and c.
  for (int i = 0; i < a.rows(); ++i) {
    cplx* ci = c.row_ptr(i);
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* bk = b.row_ptr(k);
      for (int j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

}  // namespace szego
