#pragma once

#include <iosfwd>

#include "szego/wiener_hopf.hpp"

namespace szego {

/// Geometric mean G(a) = exp of the circle average of log det a. The
/// primary path averages the unwrapped log at r = 1; an Abel-Poisson
/// extrapolation r -> 1 takes over when the grid phase is too rough.
/// Rejected when det a winds around the origin.
cplx G_of(const FourierSymbol& sym, int grid_log2 = 0);

/// Fallback path of G_of: circle averages of log det a_r at
/// r in {0.99, 0.995, 0.999} extrapolated to r = 1.
cplx G_of_abel(const FourierSymbol& sym, int grid_log2 = 0);

struct EOptions {
  int max_section = 8192;
  double stabilization_tol = 1e-9;
  double route_tol = 1e-6;    // required agreement of the two routes
  int band = 0;               // inverse band; 0: auto
  double invert_tol = 1e-10;
};

struct EResult {
  cplx value = 0.0;           // route 1 at the final section
  cplx route_hankel_bc = 0.0; // 1 / det(I - H(b)H(c~))
  cplx route_hankel_a = 0.0;  // det(I - H(a)H((a^{-1})~))
  int section = 0;
  double route_gap = 0.0;
};

/// Szego constant E(a) = 1/det T(b)T(c) = det T(a)T(a^{-1}), by two
/// independent Hankel-determinant routes that must agree.
EResult E_of(const FourierSymbol& sym, const CanonicalFactorization& fact,
             int section_size = 64, const EOptions& opts = {});

struct BOCutoffs {
  int band = 0;       // factorization / pair band; 0: auto
  int section = 0;    // Hankel determinant section M; 0: auto
  int grid_log2 = 0;  // evaluation grid; 0: auto
  int inner_cutoff = -1;
};

struct BOReport {
  int n = 0;
  cplx det_tn = 0.0;
  cplx g = 0.0;
  cplx e = 0.0;
  cplx det_correction = 0.0;  // det(I - Q_n H(b)H(c~) Q_n)
  double rel_error = 0.0;     // |det T_n - G^{n+1} E detCorr| / |det T_n|
  double product_trace_norm = 0.0;  // upper estimate of ||Q_n K Q_n||_1
  double logdet_bound = 0.0;  // 2 * trace norm, attached when trace norm < 1
  BOCutoffs cutoffs;
};

/// Evaluates both sides of det T_n(a) = G(a)^{n+1} E(a) det(I - Q_n K Q_n).
/// E and the correction share one section of K so truncation effects
/// cancel in the product.
BOReport bo_verify(const FourierSymbol& sym, int n, const BOCutoffs& cutoffs = {},
                   const CanonicalFactorization* fact = nullptr);

void write_bo_csv_header(std::ostream& out);
void append_bo_csv(std::ostream& out, const BOReport& rep);

}  // namespace szego
