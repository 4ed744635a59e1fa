#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "szego/linalg.hpp"
#include "szego/rng.hpp"
#include "szego/symbol.hpp"

namespace szego {

/// Weight exponent of the space ell_2^gamma; the trace-class pipeline uses
/// gamma = 1/2 - beta.
struct WeightedSpaceParams {
  double gamma;
  explicit WeightedSpaceParams(double g);
};

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;     // lhs <= rhs + 1e-12
  bool skipped = false;  // below the validity threshold of the estimate
  std::string context;
};

constexpr double kBoundSlack = 1e-12;

/// Closed-form constant of the weighted Hilbert-Schmidt estimate:
/// (2 s)^{-1/2} on the boundary 1 + 2 gamma = 2 s, otherwise
/// (1+2g)^{-1/2} A^{1/2+g} (A+1)^{-s} with A = (2g+1)/(2s - 2g - 1).
double constant_M(double smoothness, double gamma);

/// ||H(c~) Q_n||_{C2(l2, l2^gamma)} <= M(alpha,gamma) r_{n+1}^-(c) / n^{alpha-gamma-1/2}.
/// The left side uses the exact double sum
/// sum_{k>=n+2} |chat(-k)|^2 sum_{j=1}^{k-n-1} j^{2 gamma}.
BoundCheck hs_bound_check(const FourierSymbol& c, int n, double alpha,
                          double gamma, int sum_cutoff = -1);

/// Mirror estimate ||Q_n H(b)||_{C2(l2^gamma, l2)} with weights j^{-2 gamma}.
BoundCheck hs_bound_check_plus(const FourierSymbol& b, int n, double beta,
                               double gamma, int sum_cutoff = -1);

/// Direct weighted Hilbert-Schmidt norm of the sectioned H(c~) Q_n matrix;
/// independent evaluation of the hs_bound_check left side.
double weighted_hs_norm_direct(const FourierSymbol& c, int n, double gamma,
                               int row_cutoff);
double weighted_hs_norm_direct_plus(const FourierSymbol& b, int n, double gamma,
                                    int col_cutoff);

/// |log det(I - A)| <= 2 ||A||_1, valid for trace norm < 1.
BoundCheck check_logdet_bound(const DenseOperator& a);

/// ||A B||_1 <= ||A||_2 ||B||_2.
BoundCheck check_holder(const DenseOperator& a, const DenseOperator& b);

struct TcBoundFit {
  double empirical_L = 0.0;
  std::vector<BoundCheck> per_n;  // lhs vs empirical_L * rhs-without-L
  std::vector<double> ratios;     // lhs / rhs-without-L
  bool stable = false;            // consecutive ratios within 2x past n=16
};

/// ||Q_n H(b) H(c~) Q_n||_1 against n^{1-alpha-beta} R_{n+1}^+(b) R_{n+1}^-(c);
/// the dimensional constant is estimated, not assumed.
TcBoundFit tc_bound_fit(const FourierSymbol& b, const FourierSymbol& c,
                        const std::vector<int>& ns, double alpha, double beta,
                        int section_window = 256);

// Deterministic audit helpers ------------------------------------------------

/// Random matrix with entries uniform in the complex unit square, rescaled
/// to the requested trace norm.
DenseOperator random_with_trace_norm(Rng& rng, int n, double trace_norm);
DenseOperator random_matrix(Rng& rng, int rows, int cols);

void write_bound_csv_header(std::ostream& out);
void append_bound_csv(std::ostream& out, const std::string& name,
                      const BoundCheck& check);

}  // namespace szego
