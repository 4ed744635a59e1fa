#pragma once

#include <string>
#include <vector>

#include "szego/dense_operator.hpp"

namespace szego {

/// One term residue / (z - pole)^multiplicity.
struct PoleTerm {
  cplx pole;
  int multiplicity = 1;
  cplx residue;
};

/// Polynomial, or rational in explicit pole-residue form plus polynomial
/// part. General holomorphic functions are intentionally unsupported.
class AnalyticFunction {
 public:
  enum class Kind { Polynomial, Rational };

  static AnalyticFunction polynomial(std::vector<cplx> coeffs,
                                     std::string description = "");
  static AnalyticFunction rational(std::vector<cplx> poly_part,
                                   std::vector<PoleTerm> poles,
                                   std::string description = "");

  Kind kind() const { return kind_; }
  const std::vector<cplx>& poly_coeffs() const { return poly_; }
  const std::vector<PoleTerm>& poles() const { return poles_; }
  const std::string& description() const { return description_; }

  cplx eval(cplx z) const;
  cplx eval_derivative(cplx z) const;

  /// f(A) for a small square matrix; rational terms via direct solves.
  DenseOperator eval_matrix(const DenseOperator& a) const;

 private:
  Kind kind_ = Kind::Polynomial;
  std::vector<cplx> poly_;      // ascending powers
  std::vector<PoleTerm> poles_;
  std::string description_;
};

}  // namespace szego
