#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "szego/common.hpp"

namespace szego {

/// Semantic tag carried by finite sections so reports can say what a
/// matrix is a truncation of.
enum class OpLabel {
  ToeplitzSection,
  Hankel,
  HankelReflected,
  ProductTruncation,
  Generic,
};

std::string to_string(OpLabel label);

/// Dense complex matrix, row-major.
class DenseOperator {
 public:
  DenseOperator() = default;
  DenseOperator(int rows, int cols, OpLabel label = OpLabel::Generic)
      : rows_(rows), cols_(cols), label_(label),
        data_(std::size_t(rows) * std::size_t(cols)) {
    if (rows <= 0 || cols <= 0)
      throw NumericalError("DenseOperator: nonpositive dimensions");
  }

  static DenseOperator identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  cplx operator()(int i, int j) const {
    return data_[std::size_t(i) * cols_ + j];
  }

  cplx* row_ptr(int i) { return data_.data() + std::size_t(i) * cols_; }
  const cplx* row_ptr(int i) const {
    return data_.data() + std::size_t(i) * cols_;
  }

  OpLabel label() const { return label_; }
  void set_label(OpLabel label) { label_ = label; }

  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  cplx trace() const;
  DenseOperator adjoint() const;
  DenseOperator transpose() const;

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator-=(const DenseOperator& other);
  DenseOperator& operator*=(cplx scale);

  double max_abs() const;

  /// Text dump: one row per line, entries "re+imi" with 17 significant
  /// digits.
  void dump(std::ostream& out) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  OpLabel label_ = OpLabel::Generic;
  std::vector<cplx> data_;
};

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b);

}  // namespace szego
