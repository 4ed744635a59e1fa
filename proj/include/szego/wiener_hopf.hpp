#pragma once

#include <utility>

#include "szego/symbol.hpp"

namespace szego {

/// Canonical right (a = u_- u_+) and left (a = v_+ v_-) factorizations
/// plus the derived pair b = v_- u_+^{-1}, c = u_-^{-1} v_+. Normalization:
/// the zeroth coefficient of u_+ and of v_+ is the identity; all constant
/// freedom sits in u_- and v_-.
struct CanonicalFactorization {
  FourierSymbol u_minus, u_plus, v_plus, v_minus;
  FourierSymbol b_sym, c_sym;
  bool bo_pair_set = false;
  double right_residual = 0.0;  // max over grid of ||a - u_- u_+||
  double left_residual = 0.0;   // max over grid of ||a - v_+ v_-||
  double support_leakage = 0.0; // largest coefficient dropped on the wrong side
  std::string normalization = "u_plus(0)=I, v_plus(0)=I";
};

struct FactorizationOptions {
  int grid_log2 = 0;             // 0: auto from the band
  int max_grid_log2 = 18;        // phase-refinement cap
  double invert_tol = 1e-10;
  // Finite-section route:
  int section_order = 0;         // 0: auto (8 x band), doubled to stabilize
  int max_section_order = 4096;
  double stabilization_tol = 1e-8;
};

/// Scalar log-split factorization: L = log a with unwrapped phase is
/// split as c0 + L_+ + L_-, then u_+ = exp(L_+), u_- = exp(c0 + L_-),
/// v_+ = exp(c0 + L_+), v_- = exp(L_-). Fails on nonzero winding.
CanonicalFactorization scalar_canonical(const FourierSymbol& sym,
                                        int band_limit,
                                        const FactorizationOptions& opts = {});

/// Right factors by the finite-section route: the first block column of
/// T_n(a)^{-1} recovers u_+^{-1} up to the constant normalizer; the order
/// is doubled until the recovered coefficients stabilize.
std::pair<FourierSymbol, FourierSymbol> matrix_canonical_right(
    const FourierSymbol& sym, int section_order, int band_limit,
    const FactorizationOptions& opts = {});

/// Left factors from the right factorization of the transposed symbol:
/// a^T = w_- w_+ gives a = w_+^T w_-^T = v_+ v_-.
std::pair<FourierSymbol, FourierSymbol> matrix_canonical_left(
    const FourierSymbol& sym, int section_order, int band_limit,
    const FactorizationOptions& opts = {});

/// b = v_- u_+^{-1} and c = u_-^{-1} v_+ at the requested band; also
/// spot-checks the identity T(b)T(c) = I - H(b)H(c~) on a finite section.
std::pair<FourierSymbol, FourierSymbol> bo_pair(
    const CanonicalFactorization& fact, int band_limit,
    const FactorizationOptions& opts = {});

/// Exact entries of the section of the infinite product T(b)T(c) compared
/// against I - H(b)H(c~); machine-zero for band-limited symbols.
double bo_pair_identity_residual(const FourierSymbol& b, const FourierSymbol& c,
                                 int section);

struct ResidualReport {
  double right = 0.0;
  double left = 0.0;
  double support_leakage = 0.0;
};

/// Grid residuals of the stored factors (spectral-norm mismatch).
ResidualReport residual(const FourierSymbol& sym,
                        const CanonicalFactorization& fact, int grid_log2 = 0);

/// Dispatches on N, fills the factorization, the pair (b, c), and the
/// residuals.
CanonicalFactorization canonical_factorization(
    const FourierSymbol& sym, int band_limit,
    const FactorizationOptions& opts = {});

/// Factorization bundle: four symbol records plus a residual summary line.
void write_factorization(const CanonicalFactorization& fact, std::ostream& out);

}  // namespace szego
