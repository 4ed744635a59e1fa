#include "szego/analytic_function.hpp"

#include <cmath>

#include "szego/linalg.hpp"

namespace szego {

AnalyticFunction AnalyticFunction::polynomial(std::vector<cplx> coeffs,
                                              std::string description) {
  AnalyticFunction f;
  f.kind_ = Kind::Polynomial;
  f.poly_ = std::move(coeffs);
  if (f.poly_.empty()) f.poly_.push_back(0.0);
  f.description_ = std::move(description);
  return f;
}

AnalyticFunction AnalyticFunction::rational(std::vector<cplx> poly_part,
                                            std::vector<PoleTerm> poles,
                                            std::string description) {
  AnalyticFunction f;
  f.kind_ = Kind::Rational;
  f.poly_ = std::move(poly_part);
  if (f.poly_.empty()) f.poly_.push_back(0.0);
  f.poles_ = std::move(poles);
  for (const auto& p : f.poles_)
    if (p.multiplicity < 1)
      throw NumericalError("AnalyticFunction: pole multiplicity must be >= 1");
  f.description_ = std::move(description);
  return f;
}

cplx AnalyticFunction::eval(cplx z) const {
  cplx value = 0.0;
  for (std::size_t i = poly_.size(); i-- > 0;) value = value * z + poly_[i];
  for (const auto& term : poles_) {
    const cplx d = z - term.pole;
    cplx dp = d;
    for (int m = 1; m < term.multiplicity; ++m) dp *= d;
    value += term.residue / dp;
  }
  return value;
}

cplx AnalyticFunction::eval_derivative(cplx z) const {
  cplx value = 0.0;
  for (std::size_t i = poly_.size(); i-- > 1;)
    value = value * z + double(i) * poly_[i];
  for (const auto& term : poles_) {
    const cplx d = z - term.pole;
    cplx dp = d;
    for (int m = 0; m < term.multiplicity; ++m) dp *= d;
    value -= double(term.multiplicity) * term.residue / dp;
  }
  return value;
}

DenseOperator AnalyticFunction::eval_matrix(const DenseOperator& a) const {
  if (!a.square()) throw NumericalError("eval_matrix: matrix not square");
  const int n = a.rows();
  DenseOperator value(n, n);
  for (std::size_t i = poly_.size(); i-- > 0;) {
    value = matmul(value, a);
    for (int d = 0; d < n; ++d) value(d, d) += poly_[i];
  }
  for (const auto& term : poles_) {
    DenseOperator shifted = a;
    for (int d = 0; d < n; ++d) shifted(d, d) -= term.pole;
    DenseOperator resolvent = inverse(shifted);
    DenseOperator power = resolvent;
    for (int m = 1; m < term.multiplicity; ++m)
      power = matmul(power, resolvent);
    power *= term.residue;
    value += power;
  }
  return value;
}

}  // namespace szego
