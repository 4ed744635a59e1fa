#include "szego/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "szego/fft.hpp"
#include "szego/linalg.hpp"

namespace szego {

KreinIndex::KreinIndex(double a, double b) : alpha(a), beta(b) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
    throw NumericalError("KreinIndex: alpha and beta must lie in (0,1), got (" +
                         fmt17(a) + ", " + fmt17(b) + ")");
}

FourierSymbol::FourierSymbol(int dim, int band) : dim_(dim), band_(band) {
  if (dim <= 0) throw NumericalError("FourierSymbol: dimension must be positive");
  if (band < 0) throw NumericalError("FourierSymbol: band must be nonnegative");
  data_.assign(std::size_t(2 * band + 1) * dim * dim, cplx(0.0, 0.0));
}

FourierSymbol FourierSymbol::from_scalar_coeffs(
    const std::map<int, cplx>& coeffs, std::string label) {
  int band = 0;
  for (const auto& [k, v] : coeffs) band = std::max(band, std::abs(k));
  FourierSymbol sym(1, band);
  for (const auto& [k, v] : coeffs) sym.set_scalar_coeff(k, v);
  sym.set_label(std::move(label));
  sym.trim();
  return sym;
}

FourierSymbol FourierSymbol::constant(const DenseOperator& value,
                                      std::string label) {
  if (!value.square()) throw NumericalError("constant symbol: block not square");
  FourierSymbol sym(value.rows(), 0);
  sym.set_coeff(0, value);
  sym.set_label(std::move(label));
  return sym;
}

FourierSymbol FourierSymbol::constant_scalar(cplx value, std::string label) {
  FourierSymbol sym(1, 0);
  sym.set_scalar_coeff(0, value);
  sym.set_label(std::move(label));
  return sym;
}

DenseOperator FourierSymbol::coeff(int k) const {
  DenseOperator block(dim_, dim_);
  const cplx* p = block_ptr(k);
  if (p)
    for (int i = 0; i < dim_ * dim_; ++i) block.data()[std::size_t(i)] = p[i];
  return block;
}

cplx FourierSymbol::scalar_coeff(int k) const {
  const cplx* p = block_ptr(k);
  return p ? p[0] : cplx(0.0, 0.0);
}

void FourierSymbol::set_coeff(int k, const DenseOperator& block) {
  if (block.rows() != dim_ || block.cols() != dim_)
    throw NumericalError("set_coeff: block dimension mismatch");
  if (k < -band_ || k > band_)
    throw NumericalError("set_coeff: index outside allocated band");
  cplx* p = data_.data() + std::size_t(k + band_) * dim_ * dim_;
  for (int i = 0; i < dim_ * dim_; ++i) p[i] = block.data()[std::size_t(i)];
}

void FourierSymbol::set_scalar_coeff(int k, cplx value) {
  if (dim_ != 1) throw NumericalError("set_scalar_coeff: symbol not scalar");
  if (k < -band_ || k > band_)
    throw NumericalError("set_scalar_coeff: index outside allocated band");
  data_[std::size_t(k + band_)] = value;
}

void FourierSymbol::trim(double drop_tol) {
  auto block_nonzero = [&](int k) {
    const cplx* p = block_ptr(k);
    for (int i = 0; i < dim_ * dim_; ++i)
      if (std::abs(p[i]) > drop_tol) return true;
    return false;
  };
  int new_band = 0;
  for (int k = band_; k >= 1; --k) {
    if (block_nonzero(k) || block_nonzero(-k)) {
      new_band = k;
      break;
    }
  }
  if (new_band == band_) return;
  std::vector<cplx> packed(std::size_t(2 * new_band + 1) * dim_ * dim_);
  for (int k = -new_band; k <= new_band; ++k) {
    const cplx* src = block_ptr(k);
    std::copy(src, src + dim_ * dim_,
              packed.begin() + std::size_t(k + new_band) * dim_ * dim_);
  }
  band_ = new_band;
  data_ = std::move(packed);
}

int FourierSymbol::side_band(Side side) const {
  const int sign = side == Side::Plus ? 1 : -1;
  for (int k = band_; k >= 1; --k) {
    const cplx* p = block_ptr(sign * k);
    for (int i = 0; i < dim_ * dim_; ++i)
      if (p[i] != cplx(0.0, 0.0)) return k;
  }
  return 0;
}

bool FourierSymbol::is_hermitian(double tol) const {
  for (int k = 0; k <= band_; ++k) {
    const cplx* plus = block_ptr(k);
    const cplx* minus = block_ptr(-k);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        const cplx want = std::conj(plus[std::size_t(i) * dim_ + j]);
        if (std::abs(minus[std::size_t(j) * dim_ + i] - want) > tol)
          return false;
      }
  }
  return true;
}

double FourierSymbol::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

// ---------------------------------------------------------------------------

DenseOperator GridSamples::block_matrix(std::size_t j) const {
  DenseOperator out(dim, dim);
  const cplx* p = block(j);
  for (int i = 0; i < dim * dim; ++i) out.data()[std::size_t(i)] = p[i];
  return out;
}

int default_grid_log2(const FourierSymbol& sym, int at_least) {
  int m = at_least;
  while ((std::size_t(1) << m) <= 2 * std::size_t(sym.band())) ++m;
  return m;
}

GridSamples evaluate_on_grid(const FourierSymbol& sym, int log2_size) {
  const std::size_t M = std::size_t(1) << log2_size;
  if (M <= 2 * std::size_t(sym.band()))
    throw NumericalError("evaluate_on_grid: grid of size " + std::to_string(M) +
                         " cannot resolve band " + std::to_string(sym.band()));
  const int N = sym.dim();
  GridSamples out;
  out.dim = N;
  out.log2_size = log2_size;
  out.values.assign(M * std::size_t(N) * N, cplx(0.0, 0.0));
  std::vector<cplx> bins(M);
  for (int e = 0; e < N * N; ++e) {
    std::fill(bins.begin(), bins.end(), cplx(0.0, 0.0));
    for (int k = -sym.band(); k <= sym.band(); ++k) {
      const cplx v = sym.block_ptr(k)[e];
      if (v != cplx(0.0, 0.0)) bins[std::size_t((k % int(M) + int(M)) % int(M))] += v;
    }
    ifft_unnormalized(bins);
    for (std::size_t j = 0; j < M; ++j)
      out.values[j * std::size_t(N) * N + std::size_t(e)] = bins[j];
  }
  return out;
}

FourierSymbol fourier_from_samples(const GridSamples& samples, int band_limit,
                                   std::string label) {
  const std::size_t M = samples.size();
  if (M == 0) throw NumericalError("fourier_from_samples: no samples");
  if (band_limit < 0)
    throw NumericalError("fourier_from_samples: negative band limit");
  if (M <= 2 * std::size_t(band_limit))
    throw NumericalError(
        "fourier_from_samples: grid of size " + std::to_string(M) +
        " aliases band " + std::to_string(band_limit) +
        " (need more than 2K samples)");
  const int N = samples.dim;
  FourierSymbol sym(N, band_limit);
  sym.set_label(std::move(label));
  std::vector<cplx> bins(M);
  std::vector<cplx> block(std::size_t(N) * N);
  // One transform per matrix entry.
  for (int e = 0; e < N * N; ++e) {
    for (std::size_t j = 0; j < M; ++j)
      bins[j] = samples.values[j * std::size_t(N) * N + std::size_t(e)];
    fft(bins);
    for (int k = -band_limit; k <= band_limit; ++k) {
      const cplx v = bins[std::size_t((k % int(M) + int(M)) % int(M))] / double(M);
      // write directly
      DenseOperator b = sym.coeff(k);
      b.data()[std::size_t(e)] = v;
      sym.set_coeff(k, b);
    }
  }
  sym.trim();
  return sym;
}

FourierSymbol fourier_from_samples(const std::vector<DenseOperator>& samples,
                                   int band_limit, std::string label) {
  if (samples.empty()) throw NumericalError("fourier_from_samples: no samples");
  GridSamples grid;
  grid.dim = samples.front().rows();
  std::size_t M = samples.size();
  if (!is_power_of_two(M))
    throw NumericalError("fourier_from_samples: sample count must be a power of two");
  grid.log2_size = 0;
  while ((std::size_t(1) << grid.log2_size) < M) ++grid.log2_size;
  const int N = grid.dim;
  grid.values.resize(M * std::size_t(N) * N);
  for (std::size_t j = 0; j < M; ++j) {
    if (samples[j].rows() != N || samples[j].cols() != N)
      throw NumericalError("fourier_from_samples: inconsistent sample dimensions");
    for (int e = 0; e < N * N; ++e)
      grid.values[j * std::size_t(N) * N + std::size_t(e)] =
          samples[j].data()[std::size_t(e)];
  }
  return fourier_from_samples(grid, band_limit, std::move(label));
}

FourierSymbol scalar_from_samples(const std::vector<cplx>& samples,
                                  int band_limit, std::string label) {
  GridSamples grid;
  grid.dim = 1;
  if (!is_power_of_two(samples.size()))
    throw NumericalError("scalar_from_samples: sample count must be a power of two");
  grid.log2_size = 0;
  while ((std::size_t(1) << grid.log2_size) < samples.size()) ++grid.log2_size;
  grid.values = samples;
  return fourier_from_samples(grid, band_limit, std::move(label));
}

// ---------------------------------------------------------------------------

FourierSymbol multiply(const FourierSymbol& a, const FourierSymbol& b,
                       int band_limit) {
  if (a.dim() != b.dim())
    throw NumericalError("multiply: dimension mismatch");
  const int N = a.dim();
  const int exact_band = a.band() + b.band();
  const int K = std::min(band_limit, exact_band);
  FourierSymbol out(N, K);
  DenseOperator acc(N, N);
  for (int k = -K; k <= K; ++k) {
    std::fill(acc.data().begin(), acc.data().end(), cplx(0.0, 0.0));
    const int mlo = std::max(-a.band(), k - b.band());
    const int mhi = std::min(a.band(), k + b.band());
    for (int m = mlo; m <= mhi; ++m) {
      const cplx* pa = a.block_ptr(m);
      const cplx* pb = b.block_ptr(k - m);
      // acc += pa * pb
      for (int i = 0; i < N; ++i)
        for (int l = 0; l < N; ++l) {
          const cplx v = pa[std::size_t(i) * N + l];
          if (v == cplx(0.0, 0.0)) continue;
          for (int j = 0; j < N; ++j)
            acc(i, j) += v * pb[std::size_t(l) * N + j];
        }
    }
    out.set_coeff(k, acc);
  }
  out.set_truncated(band_limit < exact_band);
  out.trim();
  return out;
}

FourierSymbol invert(const FourierSymbol& sym, int band_limit,
                     const InvertOptions& opts) {
  const int N = sym.dim();
  int m = opts.grid_log2;
  if (m == 0) m = default_grid_log2(sym, 12);
  while ((std::size_t(1) << m) <= 2 * std::size_t(band_limit)) ++m;
  GridSamples grid = evaluate_on_grid(sym, m);
  const std::size_t M = grid.size();
  GridSamples inv;
  inv.dim = N;
  inv.log2_size = m;
  inv.values.assign(M * std::size_t(N) * N, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < M; ++j) {
    if (N == 1) {
      const cplx v = grid.scalar(j);
      if (std::abs(v) <= opts.singular_tol)
        throw NumericalError("invert: symbol nearly singular at theta=" +
                             fmt17(2.0 * kPi * double(j) / double(M)) +
                             " (|a|=" + fmt17(std::abs(v)) + ")");
      inv.values[j] = 1.0 / v;
    } else {
      DenseOperator block = grid.block_matrix(j);
      const auto sv = singular_values(block);
      if (sv.back() <= opts.singular_tol)
        throw NumericalError("invert: symbol nearly singular at theta=" +
                             fmt17(2.0 * kPi * double(j) / double(M)) +
                             " (sigma_min=" + fmt17(sv.back()) + ")");
      DenseOperator bi = inverse(block);
      for (int e = 0; e < N * N; ++e)
        inv.values[j * std::size_t(N) * N + std::size_t(e)] =
            bi.data()[std::size_t(e)];
    }
  }
  FourierSymbol out = fourier_from_samples(inv, band_limit,
                                           "inv(" + sym.label() + ")");
  return out;
}

FourierSymbol reflect(const FourierSymbol& sym) {
  FourierSymbol out(sym.dim(), sym.band());
  for (int k = -sym.band(); k <= sym.band(); ++k)
    out.set_coeff(-k, sym.coeff(k));
  out.set_label("reflect(" + sym.label() + ")");
  out.trim();
  return out;
}

FourierSymbol transpose(const FourierSymbol& sym) {
  FourierSymbol out(sym.dim(), sym.band());
  for (int k = -sym.band(); k <= sym.band(); ++k)
    out.set_coeff(k, sym.coeff(k).transpose());
  out.set_label("transpose(" + sym.label() + ")");
  out.trim();
  return out;
}

FourierSymbol add(const FourierSymbol& a, const FourierSymbol& b, cplx scale) {
  if (a.dim() != b.dim()) throw NumericalError("add: dimension mismatch");
  const int K = std::max(a.band(), b.band());
  FourierSymbol out(a.dim(), K);
  for (int k = -K; k <= K; ++k) {
    DenseOperator block = a.coeff(k);
    DenseOperator bb = b.coeff(k);
    bb *= scale;
    block += bb;
    out.set_coeff(k, block);
  }
  out.trim();
  return out;
}

FourierSymbol shift(const FourierSymbol& a, cplx lambda) {
  FourierSymbol out = a;
  DenseOperator c0 = a.coeff(0);
  for (int i = 0; i < a.dim(); ++i) c0(i, i) -= lambda;
  out.set_coeff(0, c0);
  out.set_label(a.label() + " - lambda");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double spectral_norm_block(const FourierSymbol& sym, int k) {
  if (sym.dim() == 1) return std::abs(sym.scalar_coeff(k));
  const cplx* p = sym.block_ptr(k);
  if (!p) return 0.0;
  DenseOperator block(sym.dim(), sym.dim());
  for (int i = 0; i < sym.dim() * sym.dim(); ++i)
    block.data()[std::size_t(i)] = p[i];
  auto sv = singular_values(block);
  return sv.empty() ? 0.0 : sv.front();
}

double scalar_series_term(const FourierSymbol& sym, int k, double exponent) {
  const double mag = std::abs(sym.scalar_coeff(k));
  return mag * mag * std::pow(double(std::abs(k)) + 1.0, 2.0 * exponent);
}

double sup_norm_on_grid(const FourierSymbol& sym, int grid_log2) {
  GridSamples grid = evaluate_on_grid(sym, default_grid_log2(sym, grid_log2));
  double sup = 0.0;
  if (sym.dim() == 1) {
    for (const auto& v : grid.values) sup = std::max(sup, std::abs(v));
  } else {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      auto sv = singular_values(grid.block_matrix(j));
      sup = std::max(sup, sv.front());
    }
  }
  return sup;
}

}  // namespace

double krein_norm(const FourierSymbol& sym, const KreinIndex& idx,
                  int grid_log2) {
  if (sym.dim() != 1)
    throw NumericalError("krein_norm: defined here for scalar symbols only");
  const double sup = sup_norm_on_grid(sym, grid_log2);
  double minus_sq = 0.0, plus_sq = 0.0;
  for (int k = 0; k <= sym.band(); ++k) {
    minus_sq += scalar_series_term(sym, -k, idx.alpha);
    plus_sq += scalar_series_term(sym, k, idx.beta);
  }
  return sup + std::sqrt(minus_sq) + std::sqrt(plus_sq);
}

double tail(const FourierSymbol& sym, int n, Side side, const KreinIndex& idx) {
  if (n < 0) throw NumericalError("tail: n must be nonnegative");
  const double exponent = side == Side::Minus ? idx.alpha : idx.beta;
  const int sign = side == Side::Minus ? -1 : 1;
  double sum = 0.0;
  for (int k = n + 1; k <= sym.band(); ++k) {
    const double mag = spectral_norm_block(sym, sign * k);
    sum += mag * mag * std::pow(double(k) + 1.0, 2.0 * exponent);
  }
  return std::sqrt(sum);
}

double plain_tail_sq(const FourierSymbol& sym, int n, Side side) {
  const int sign = side == Side::Minus ? -1 : 1;
  double sum = 0.0;
  for (int k = sym.band(); k > n; --k) {
    const double mag = spectral_norm_block(sym, sign * k);
    sum += mag * mag;
  }
  return sum;
}

// ---------------------------------------------------------------------------

PhaseTrack track_phase(const std::vector<cplx>& loop) {
  PhaseTrack track;
  const std::size_t M = loop.size();
  track.phase.resize(M);
  if (M == 0) return track;
  track.phase[0] = std::arg(loop[0]);
  for (std::size_t j = 0; j < M; ++j) {
    const cplx cur = loop[j];
    const cplx nxt = loop[(j + 1) % M];
    if (cur == cplx(0.0, 0.0) || nxt == cplx(0.0, 0.0))
      throw NumericalError("track_phase: zero sample on the loop");
    const double step = std::arg(nxt / cur);
    track.max_step = std::max(track.max_step, std::abs(step));
    track.net += step;
    if (j + 1 < M) track.phase[j + 1] = track.phase[j] + step;
  }
  return track;
}

int winding_number_of_samples(const std::vector<cplx>& samples) {
  PhaseTrack track = track_phase(samples);
  if (track.max_step > kPi / 2.0)
    throw NumericalError("winding: phase step " + fmt17(track.max_step) +
                         " exceeds pi/2; refine the grid");
  return int(std::lround(track.net / (2.0 * kPi)));
}

int winding_number(const FourierSymbol& sym, int grid_log2) {
  if (sym.dim() != 1)
    throw NumericalError("winding_number: scalar symbols only");
  int m = default_grid_log2(sym, grid_log2);
  for (;; ++m) {
    GridSamples grid = evaluate_on_grid(sym, m);
    for (const auto& v : grid.values)
      if (std::abs(v) < 1e-300)
        throw NumericalError("winding_number: symbol vanishes on the grid");
    PhaseTrack track = track_phase(grid.values);
    if (track.max_step <= kPi / 2.0)
      return int(std::lround(track.net / (2.0 * kPi)));
    if (m >= 18)
      throw NumericalError("winding_number: phase steps above pi/2 even at grid 2^18");
  }
}

// ---------------------------------------------------------------------------

namespace {

std::optional<double> tail_exponent_fit(const FourierSymbol& sym, Side side) {
  const int sign = side == Side::Minus ? -1 : 1;
  std::vector<double> xs, ys;
  for (int k = 1; k <= sym.band(); ++k) {
    const double mag = spectral_norm_block(sym, sign * k);
    if (mag > 0.0) {
      xs.push_back(std::log(double(k)));
      ys.push_back(std::log(mag));
    }
  }
  if (xs.size() < 8) return std::nullopt;  // insufficient data
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

bool MembershipReport::suggests_membership(const KreinIndex& idx) const {
  // sum |ahat(-k)|^2 k^{2 alpha} converges iff the decay exponent beats
  // alpha + 1/2 (and mirrored on the plus side).
  if (minus_tail_exponent_fit && !(*minus_tail_exponent_fit < -(idx.alpha + 0.5)))
    return false;
  if (plus_tail_exponent_fit && !(*plus_tail_exponent_fit < -(idx.beta + 0.5)))
    return false;
  return true;
}

MembershipReport membership_check(const FourierSymbol& sym,
                                  const KreinIndex& idx, int grid_log2,
                                  double invert_tol) {
  MembershipReport rep;
  if (sym.dim() == 1) {
    rep.krein_norm = krein_norm(sym, idx, grid_log2);
  } else {
    // Admissible max-entry norm for matrix symbols.
    double best = 0.0;
    for (int i = 0; i < sym.dim(); ++i)
      for (int j = 0; j < sym.dim(); ++j) {
        FourierSymbol entry(1, sym.band());
        for (int k = -sym.band(); k <= sym.band(); ++k)
          entry.set_scalar_coeff(k, sym.block_ptr(k)[std::size_t(i) * sym.dim() + j]);
        entry.trim();
        best = std::max(best, krein_norm(entry, idx, grid_log2));
      }
    rep.krein_norm = best;
  }
  rep.minus_tail_exponent_fit = tail_exponent_fit(sym, Side::Minus);
  rep.plus_tail_exponent_fit = tail_exponent_fit(sym, Side::Plus);

  GridSamples grid = evaluate_on_grid(sym, default_grid_log2(sym, grid_log2));
  double min_det = std::numeric_limits<double>::infinity();
  std::vector<cplx> dets(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    cplx d = sym.dim() == 1 ? grid.scalar(j) : determinant(grid.block_matrix(j));
    dets[j] = d;
    min_det = std::min(min_det, std::abs(d));
  }
  rep.min_abs_det_on_grid = min_det;
  rep.invertible_on_grid = min_det > invert_tol;
  if (sym.dim() == 1 && rep.invertible_on_grid) {
    try {
      rep.winding_number = winding_number(sym, grid_log2);
    } catch (const NumericalError&) {
      rep.winding_number = std::nullopt;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

double param_double(const CatalogParams& params, const std::string& key,
                    double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw NumericalError("catalog: parameter '" + key + "' is not a number: " +
                         it->second);
  }
}

std::string param_string(const CatalogParams& params, const std::string& key,
                         const std::string& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

FourierSymbol make_s1(double r, double s) {
  std::ostringstream label;
  label << "S1(r=" << r << ",s=" << s << ")";
  return FourierSymbol::from_scalar_coeffs(
      {{-1, -s}, {0, 1.0 + r * s}, {1, -r}}, label.str());
}

FourierSymbol make_s4(double p, double q, int K) {
  FourierSymbol series(1, K);
  for (int k = 1; k <= K; ++k) {
    series.set_scalar_coeff(k, std::pow(double(k) + 1.0, -p));
    series.set_scalar_coeff(-k, std::pow(double(k) + 1.0, -q));
  }
  // Constant term keeps |a| above 1/2 on the grid: push the symbol off
  // the origin by 0.6 past the worst sample of the oscillating part.
  GridSamples grid = evaluate_on_grid(series, default_grid_log2(series));
  double c0;
  if (series.is_hermitian(1e-14)) {
    double min_re = std::numeric_limits<double>::infinity();
    for (const auto& v : grid.values) min_re = std::min(min_re, v.real());
    c0 = 0.6 - min_re;
  } else {
    double max_abs = 0.0;
    for (const auto& v : grid.values) max_abs = std::max(max_abs, std::abs(v));
    c0 = 0.6 + max_abs;
  }
  series.set_scalar_coeff(0, c0);
  std::ostringstream label;
  label << "S4(p=" << p << ",q=" << q << ",K=" << K << ")";
  series.set_label(label.str());
  return series;
}

FourierSymbol block_diag(const FourierSymbol& a, const FourierSymbol& b,
                         const std::string& label) {
  if (a.dim() != 1 || b.dim() != 1)
    throw NumericalError("block_diag: scalar inputs expected");
  const int K = std::max(a.band(), b.band());
  FourierSymbol out(2, K);
  for (int k = -K; k <= K; ++k) {
    DenseOperator block(2, 2);
    block(0, 0) = a.scalar_coeff(k);
    block(1, 1) = b.scalar_coeff(k);
    out.set_coeff(k, block);
  }
  out.set_label(label);
  out.trim();
  return out;
}

}  // namespace

FourierSymbol catalog(const std::string& name, const CatalogParams& params) {
  if (name == "S1") {
    return make_s1(param_double(params, "r", 0.5), param_double(params, "s", 0.5));
  }
  if (name == "S2") {
    const cplx c(param_double(params, "value", 2.0),
                 param_double(params, "imag", 0.0));
    return FourierSymbol::constant_scalar(c, "S2(" + fmt17(c) + ")");
  }
  if (name == "S3") {
    return FourierSymbol::from_scalar_coeffs({{-1, 1.0}, {0, 3.0}, {1, 1.0}},
                                             "S3");
  }
  if (name == "S4") {
    return make_s4(param_double(params, "p", 1.3), param_double(params, "q", 1.3),
                   int(param_double(params, "K", 4096)));
  }
  if (name == "S5") {
    const double r = param_double(params, "r", 0.5);
    const double s = param_double(params, "s", 0.5);
    const std::string variant = param_string(params, "variant", "diag_s1_one");
    if (variant == "diag_s1_one")
      return block_diag(make_s1(r, s), FourierSymbol::constant_scalar(1.0),
                        "S5(diag_s1_one)");
    if (variant == "diag_s1_s1")
      return block_diag(make_s1(r, s), make_s1(r, s), "S5(diag_s1_s1)");
    if (variant == "diag_const")
      return block_diag(
          FourierSymbol::constant_scalar(param_double(params, "c1", 2.0)),
          FourierSymbol::constant_scalar(param_double(params, "c2", 3.0)),
          "S5(diag_const)");
    if (variant == "upper_shift") {
      // [[1, t^{-1}], [0, 1]]
      FourierSymbol out(2, 1);
      out.set_coeff(0, DenseOperator::identity(2));
      DenseOperator u(2, 2);
      u(0, 1) = 1.0;
      out.set_coeff(-1, u);
      out.set_label("S5(upper_shift)");
      return out;
    }
    if (variant == "lower_shift") {
      // [[1, 0], [t, 1]]
      FourierSymbol out(2, 1);
      out.set_coeff(0, DenseOperator::identity(2));
      DenseOperator l(2, 2);
      l(1, 0) = 1.0;
      out.set_coeff(1, l);
      out.set_label("S5(lower_shift)");
      return out;
    }
    throw NumericalError("catalog: unknown S5 variant '" + variant + "'");
  }
  if (name == "chi") {
    const int k = int(param_double(params, "k", 1));
    FourierSymbol out(1, std::abs(k));
    out.set_scalar_coeff(k, 1.0);
    out.set_label("chi_" + std::to_string(k));
    return out;
  }
  throw NumericalError("catalog: unknown symbol '" + name + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"S1", "r (0.5), s (0.5)",
       "rational (1-rt)(1-st^{-1}); band 1, in every K^{alpha,beta} for |r|,|s|<1"},
      {"S2", "value (2.0), imag (0.0)",
       "constant symbol; trivially in every K^{alpha,beta}"},
      {"S3", "(none)", "3 + t + t^{-1}; band 1, trigonometric polynomial"},
      {"S4", "p (1.3), q (1.3), K (4096)",
       "power decay ahat(k)=(k+1)^{-p}, ahat(-k)=(k+1)^{-q}; "
       "requires alpha < q - 1/2 and beta < p - 1/2"},
      {"S5",
       "variant (diag_s1_one | diag_s1_s1 | diag_const | upper_shift | "
       "lower_shift), r, s, c1, c2",
       "N=2 block combinations of the scalar entries"},
      {"chi", "k (1)", "monomial t^k; winding k, no canonical factorization for k != 0"},
  };
  return entries;
}

// ---------------------------------------------------------------------------
// Serialization

void write_symbol(const FourierSymbol& sym, std::ostream& out) {
  out << "szego-symbol " << sym.dim() << ' ' << sym.band() << ' '
      << sym.label() << '\n';
  for (int k = -sym.band(); k <= sym.band(); ++k) {
    out << k;
    const cplx* p = sym.block_ptr(k);
    for (int e = 0; e < sym.dim() * sym.dim(); ++e)
      out << ' ' << fmt17(p[e].real()) << ' ' << fmt17(p[e].imag());
    out << '\n';
  }
}

FourierSymbol read_symbol(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw NumericalError("read_symbol: empty input");
  std::istringstream header(line);
  std::string magic;
  int dim = 0, band = -1;
  header >> magic >> dim >> band;
  if (magic != "szego-symbol" || dim <= 0 || band < 0)
    throw NumericalError("read_symbol: malformed header: " + line);
  std::string label;
  std::getline(header, label);
  if (!label.empty() && label.front() == ' ') label.erase(label.begin());
  FourierSymbol sym(dim, band);
  sym.set_label(label);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int k = 0;
    if (!(row >> k)) throw NumericalError("read_symbol: bad row: " + line);
    DenseOperator block(dim, dim);
    for (int e = 0; e < dim * dim; ++e) {
      double re = 0.0, im = 0.0;
      if (!(row >> re >> im))
        throw NumericalError("read_symbol: truncated row: " + line);
      block.data()[std::size_t(e)] = cplx(re, im);
    }
    sym.set_coeff(k, block);
  }
  sym.trim();
  return sym;
}

void save_symbol(const FourierSymbol& sym, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw NumericalError("save_symbol: cannot open " + path);
  write_symbol(sym, out);
}

FourierSymbol load_symbol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NumericalError("load_symbol: cannot open " + path);
  return read_symbol(in);
}

}  // namespace szego
