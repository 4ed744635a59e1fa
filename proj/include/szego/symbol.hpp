#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "szego/dense_operator.hpp"

namespace szego {

/// Smoothness pair (alpha, beta), both strictly inside (0, 1). Stored
/// exactly as given; out-of-range values are rejected, never clamped.
struct KreinIndex {
  double alpha;
  double beta;
  KreinIndex(double a, double b);
};

enum class Side { Minus, Plus };

/// Matrix-valued Laurent polynomial on the unit circle: coefficients
/// ahat(k), |k| <= band, each an N x N complex block. Coefficients of a
/// general symbol are held on a finite band; absent indices are zero.
class FourierSymbol {
 public:
  /// Zero scalar symbol.
  FourierSymbol() : FourierSymbol(1, 0) {}
  FourierSymbol(int dim, int band);

  static FourierSymbol from_scalar_coeffs(const std::map<int, cplx>& coeffs,
                                          std::string label = "");
  static FourierSymbol constant(const DenseOperator& value,
                                std::string label = "");
  static FourierSymbol constant_scalar(cplx value, std::string label = "");

  int dim() const { return dim_; }
  int band() const { return band_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool truncated() const { return truncated_; }
  void set_truncated(bool t) { truncated_ = t; }

  /// N x N block at index k (zero outside the band).
  DenseOperator coeff(int k) const;
  cplx scalar_coeff(int k) const;

  /// Raw block pointer, nullptr outside the band. Row-major N x N.
  const cplx* block_ptr(int k) const {
    return (k < -band_ || k > band_) ? nullptr
                                     : data_.data() + std::size_t(k + band_) *
                                                          std::size_t(dim_) *
                                                          std::size_t(dim_);
  }

  void set_coeff(int k, const DenseOperator& block);
  void set_scalar_coeff(int k, cplx value);

  /// Shrinks the band to the smallest bound containing all nonzero blocks.
  void trim(double drop_tol = 0.0);

  /// Largest |k| on the given side with a nonzero block (0 if none).
  int side_band(Side side) const;

  /// True when ahat(-k) equals the conjugate transpose of ahat(k) for all k.
  bool is_hermitian(double tol = 1e-12) const;

  double max_coeff_norm() const;

 private:
  int dim_ = 1;
  int band_ = 0;
  bool truncated_ = false;
  std::string label_;
  std::vector<cplx> data_;  // blocks for k = -band..band, row-major each
};

// ---------------------------------------------------------------------------
// Grid evaluation and coefficient extraction

/// Samples of all N^2 entries at the 2^m uniform angles; sample-major
/// layout (values[j * N^2 + e]).
struct GridSamples {
  int dim = 1;
  int log2_size = 0;
  std::vector<cplx> values;

  std::size_t size() const { return std::size_t(1) << log2_size; }
  cplx scalar(std::size_t j) const { return values[j]; }
  const cplx* block(std::size_t j) const {
    return values.data() + j * std::size_t(dim) * std::size_t(dim);
  }
  DenseOperator block_matrix(std::size_t j) const;
};

/// Smallest grid exponent that resolves the band (2^m > 2K), at least
/// `at_least`.
int default_grid_log2(const FourierSymbol& sym, int at_least = 12);

GridSamples evaluate_on_grid(const FourierSymbol& sym, int log2_size);

/// Coefficients from samples on a 2^m grid by the exact DFT average
/// (1/M) sum_j a(theta_j) e^{-ik theta_j}. Exact to roundoff for Laurent
/// polynomials of degree <= K when 2^m > 2K.
FourierSymbol fourier_from_samples(const std::vector<DenseOperator>& samples,
                                   int band_limit, std::string label = "");
FourierSymbol fourier_from_samples(const GridSamples& samples, int band_limit,
                                   std::string label = "");
FourierSymbol scalar_from_samples(const std::vector<cplx>& samples,
                                  int band_limit, std::string label = "");

// ---------------------------------------------------------------------------
// Pointwise algebra

/// Cauchy product truncated to the requested band; sets the truncation
/// flag when the requested band cannot hold the exact product.
FourierSymbol multiply(const FourierSymbol& a, const FourierSymbol& b,
                       int band_limit);

struct InvertOptions {
  double singular_tol = 1e-10;  // reject below this smallest singular value
  int grid_log2 = 0;            // 0: auto
};

/// Fourier coefficients of a^{-1}: pointwise inversion of grid samples
/// followed by fourier_from_samples. Pointwise-exact at the grid nodes.
FourierSymbol invert(const FourierSymbol& sym, int band_limit,
                     const InvertOptions& opts = {});

/// Coefficient map k -> -k (the symbol t -> a(1/t)).
FourierSymbol reflect(const FourierSymbol& sym);

/// Entrywise transpose of every coefficient block.
FourierSymbol transpose(const FourierSymbol& sym);

/// a + scale * b.
FourierSymbol add(const FourierSymbol& a, const FourierSymbol& b,
                  cplx scale = 1.0);

/// a - lambda * I.
FourierSymbol shift(const FourierSymbol& a, cplx lambda);

// ---------------------------------------------------------------------------
// Norms, tails, membership

/// ||a||_{alpha,beta}: sup-norm on a 2^m grid plus the two weighted
/// coefficient series (finite sums for band-limited symbols). Scalar only.
double krein_norm(const FourierSymbol& sym, const KreinIndex& idx,
                  int grid_log2 = 12);

/// Coefficient tail r_n^± (N = 1) or R_n^± (matrix coefficients measured
/// in spectral norm). Nonincreasing in n; zero once n reaches the band.
double tail(const FourierSymbol& sym, int n, Side side, const KreinIndex& idx);

/// Plain (unweighted) squared coefficient tail sum_{k>n} ||ahat(±k)||^2.
double plain_tail_sq(const FourierSymbol& sym, int n, Side side);

struct MembershipReport {
  double krein_norm = 0.0;
  std::optional<double> minus_tail_exponent_fit;
  std::optional<double> plus_tail_exponent_fit;
  bool invertible_on_grid = false;
  double min_abs_det_on_grid = 0.0;
  std::optional<int> winding_number;  // scalar symbols only

  /// Tail-exponent heuristic for membership in K^{alpha,beta}: the fitted
  /// decay must beat the convergence threshold of the weighted series.
  /// Sides with too few coefficients are band-limited, hence trivially in.
  bool suggests_membership(const KreinIndex& idx) const;
};

MembershipReport membership_check(const FourierSymbol& sym,
                                  const KreinIndex& idx, int grid_log2 = 12,
                                  double invert_tol = 1e-10);

// ---------------------------------------------------------------------------
// Phase tracking / winding

struct PhaseTrack {
  std::vector<double> phase;  // unwrapped, size M (phase[0] = principal arg)
  double net = 0.0;           // total increment around the closed loop
  double max_step = 0.0;
};

/// Unwraps the argument along a closed loop of nonzero samples.
PhaseTrack track_phase(const std::vector<cplx>& loop);

/// Winding number of a scalar symbol about the origin; refines the grid
/// (up to 2^18) until phase increments drop below pi/2.
int winding_number(const FourierSymbol& sym, int grid_log2 = 12);
int winding_number_of_samples(const std::vector<cplx>& samples);

// ---------------------------------------------------------------------------
// Catalog

using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string name;
  std::string params_help;
  std::string membership_note;
};

/// Deterministic test-symbol catalog (S1..S5, chi).
FourierSymbol catalog(const std::string& name,
                      const CatalogParams& params = {});
const std::vector<CatalogEntry>& catalog_entries();

// ---------------------------------------------------------------------------
// Serialization: header "szego-symbol N K label", then one line per
// coefficient "k re im [re im ...]" row-major, 17 significant digits.

void write_symbol(const FourierSymbol& sym, std::ostream& out);
FourierSymbol read_symbol(std::istream& in);
void save_symbol(const FourierSymbol& sym, const std::string& path);
FourierSymbol load_symbol(const std::string& path);

}  // namespace szego
