#include "szego/szego_constants.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "szego/linalg.hpp"
#include "szego/sections.hpp"

namespace szego {

namespace {

std::vector<cplx> det_samples(const GridSamples& grid) {
  std::vector<cplx> dets(grid.size());
  if (grid.dim == 1) {
    std::copy(grid.values.begin(), grid.values.end(), dets.begin());
  } else {
    for (std::size_t j = 0; j < grid.size(); ++j)
      dets[j] = determinant(grid.block_matrix(j));
  }
  return dets;
}

cplx mean_log(const std::vector<cplx>& dets, const PhaseTrack& track) {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < dets.size(); ++j) {
    re += std::log(std::abs(dets[j]));
    im += track.phase[j];
  }
  const double M = double(dets.size());
  return {re / M, im / M};
}

/// Abel-Poisson regularized symbol a_r with coefficients ahat(k) r^{|k|}.
FourierSymbol abel_means(const FourierSymbol& sym, double r) {
  FourierSymbol out(sym.dim(), sym.band());
  for (int k = -sym.band(); k <= sym.band(); ++k) {
    DenseOperator block = sym.coeff(k);
    block *= std::pow(r, std::abs(k));
    out.set_coeff(k, block);
  }
  out.trim();
  return out;
}

}  // namespace

cplx G_of(const FourierSymbol& sym, int grid_log2) {
  int m = grid_log2 ? grid_log2 : default_grid_log2(sym, 12);
  GridSamples grid = evaluate_on_grid(sym, m);
  std::vector<cplx> dets = det_samples(grid);
  double max_det = 0.0;
  for (const auto& d : dets) max_det = std::max(max_det, std::abs(d));
  for (std::size_t j = 0; j < dets.size(); ++j)
    if (std::abs(dets[j]) <= 1e-14 * max_det)
      throw NumericalError("G_of: det a vanishes at theta=" +
                           fmt17(2.0 * kPi * double(j) / double(dets.size())));
  PhaseTrack track = track_phase(dets);
  if (track.max_step <= kPi / 2.0) {
    const int winding = int(std::lround(track.net / (2.0 * kPi)));
    if (winding != 0)
      throw NumericalError("G_of: det a has winding " + std::to_string(winding) +
                           "; G undefined");
    return std::exp(mean_log(dets, track));
  }
  // Rough phase at r = 1: fall back to Abel-Poisson means.
  return G_of_abel(sym, m);
}

cplx G_of_abel(const FourierSymbol& sym, int grid_log2) {
  const int m = grid_log2 ? grid_log2 : default_grid_log2(sym, 12);
  const double rs[3] = {0.99, 0.995, 0.999};
  cplx values[3];
  for (int i = 0; i < 3; ++i) {
    GridSamples g = evaluate_on_grid(abel_means(sym, rs[i]), m);
    std::vector<cplx> d = det_samples(g);
    for (const auto& v : d)
      if (std::abs(v) < 1e-300)
        throw NumericalError("G_of: regularized determinant vanishes");
    PhaseTrack t = track_phase(d);
    if (t.max_step > kPi / 2.0)
      throw NumericalError("G_of: phase unresolved even with Abel-Poisson means");
    if (int(std::lround(t.net / (2.0 * kPi))) != 0)
      throw NumericalError("G_of: regularized det a has nonzero winding");
    values[i] = mean_log(d, t);
  }
  // Neville extrapolation of the log-mean in x = 1 - r down to x = 0.
  double xs[3] = {1.0 - rs[0], 1.0 - rs[1], 1.0 - rs[2]};
  cplx p01 = values[1] + (values[1] - values[0]) * (xs[1] / (xs[0] - xs[1]));
  cplx p12 = values[2] + (values[2] - values[1]) * (xs[2] / (xs[1] - xs[2]));
  cplx p012 = p12 + (p12 - p01) * (xs[2] / (xs[0] - xs[2]));
  return std::exp(p012);
}

namespace {

struct SectionDet {
  cplx det;          // det(I - K_M), tail-corrected
  cplx raw_det;      // det of the finite section alone
  cplx tail_factor;  // exp(-sum of the diagonal traces beyond the section)
};

/// det(I - K) for K = H(b)H(c~) from the M-section plus the exact
/// diagonal continuation; rows of K vanish past the plus band of b, so
/// the continuation terminates.
SectionDet hankel_det(const FourierSymbol& b, const FourierSymbol& c, int M,
                      int skip = -1) {
  const int N = b.dim();
  const int extent = std::min(hankel_product_row_extent(b),
                              hankel_product_col_extent(c));
  SectionDet out;
  if (extent == 0 || M <= 0 || (skip >= 0 && skip + 1 >= extent)) {
    out.det = out.raw_det = 1.0;
    out.tail_factor = 1.0;
    return out;
  }
  const int r0 = skip >= 0 ? skip + 1 : 0;
  int r1 = std::min(std::max(M, r0 + 1), extent);
  // Rows past the numeric support only feed the diagonal continuation.
  while (r1 > r0 + 1 &&
         std::sqrt(plain_tail_sq(b, r1 - 2, Side::Plus) *
                   plain_tail_sq(c, r1 - 2, Side::Minus)) < 1e-13)
    --r1;
  HankelProductBlock blk = hankel_product_block(b, c, r0, r1, r0, r1);
  DenseOperator section = DenseOperator::identity((r1 - r0) * N);
  section -= blk.op;
  LogDet ld = log_determinant(section);
  cplx tail_log = 0.0;
  if (r1 < extent) {
    auto diag = hankel_product_diag_trace(b, c, r1, extent);
    for (const auto& t : diag) tail_log -= t;
  }
  out.raw_det = ld.value();
  out.tail_factor = std::exp(tail_log);
  out.det = out.raw_det * out.tail_factor;
  return out;
}

/// Safe upper estimate of ||Q_n K Q_n||_1: exact trace norm of the leading
/// square window plus coefficient-tail bounds for the three outer blocks
/// (||A||_1 <= sum of column or row two-norms, entries bounded by
/// Cauchy-Schwarz on the tails).
double product_trace_norm_upper(const FourierSymbol& b, const FourierSymbol& c,
                                int n, int window) {
  const int N = b.dim();
  const int extent = std::min(hankel_product_row_extent(b),
                              hankel_product_col_extent(c));
  if (n + 1 >= extent) return 0.0;
  int wend = std::min(extent, n + 1 + window);
  // Drop numerically dead rows before the SVD.
  while (wend > n + 2 &&
         std::sqrt(plain_tail_sq(b, wend - 2, Side::Plus) *
                   plain_tail_sq(c, wend - 2, Side::Minus)) < 1e-13)
    --wend;
  HankelProductBlock blk = hankel_product_block(b, c, n + 1, wend, n + 1, wend);
  double norm = schatten_norm(blk.op).trace_norm;
  if (wend < extent) {
    double row_win_sq = 0.0, col_win_sq = 0.0;
    for (int i = n + 1; i < wend; ++i) {
      row_win_sq += plain_tail_sq(b, i, Side::Plus);
      col_win_sq += plain_tail_sq(c, i, Side::Minus);
    }
    double bt_sum = 0.0, ct_sum = 0.0, ct_sq = 0.0;
    for (int i = wend; i < extent; ++i) {
      bt_sum += std::sqrt(plain_tail_sq(b, i, Side::Plus));
      const double csq = plain_tail_sq(c, i, Side::Minus);
      ct_sum += std::sqrt(csq);
      ct_sq += csq;
    }
    norm += double(N) * (ct_sum * std::sqrt(row_win_sq) +      // right block
                         bt_sum * std::sqrt(col_win_sq) +      // lower block
                         bt_sum * std::sqrt(ct_sq));           // corner
  }
  return norm;
}

}  // namespace

EResult E_of(const FourierSymbol& sym, const CanonicalFactorization& fact,
             int section_size, const EOptions& opts) {
  if (std::max(fact.right_residual, fact.left_residual) > 1e-8)
    throw NumericalError("E_of: factorization residual above 1e-8");
  if (!fact.bo_pair_set)
    throw NumericalError("E_of: factorization lacks the (b, c) pair");

  const int band = opts.band ? opts.band
                             : std::max({64, sym.band(), fact.b_sym.band()});
  InvertOptions inv_opts;
  inv_opts.singular_tol = opts.invert_tol;
  // hankel_det pairs H(x) with H(y~) reading y at negative indices, so the
  // route det(I - H(a)H((a^{-1})~)) takes a^{-1} as is.
  FourierSymbol a_inv = invert(sym, band, inv_opts);

  EResult result;
  cplx prev = 0.0;
  int M = std::max(8, section_size);
  for (;; M *= 2) {
    SectionDet d_bc = hankel_det(fact.b_sym, fact.c_sym, M);
    SectionDet d_a = hankel_det(sym, a_inv, M);
    result.route_hankel_bc = 1.0 / d_bc.det;
    result.route_hankel_a = d_a.det;
    result.section = M;
    result.value = result.route_hankel_bc;
    if (prev != cplx(0.0, 0.0) &&
        std::abs(result.value - prev) <= opts.stabilization_tol * std::abs(result.value))
      break;
    prev = result.value;
    if (2 * M > opts.max_section || 2 * M > 4 * std::max(hankel_product_row_extent(fact.b_sym), 8))
      break;  // section already covers the full finite support
  }
  result.route_gap = std::abs(result.route_hankel_bc - result.route_hankel_a) /
                     std::max(1e-300, std::abs(result.route_hankel_bc));
  if (result.route_gap > opts.route_tol)
    throw NumericalError(
        "E_of: routes disagree: 1/det(I-H(b)H(c~)) = " +
        fmt17(result.route_hankel_bc) + ", det(I-H(a)H((a^{-1})~)) = " +
        fmt17(result.route_hankel_a) + ", relative gap " + fmt17(result.route_gap));
  return result;
}

BOReport bo_verify(const FourierSymbol& sym, int n, const BOCutoffs& cutoffs,
                   const CanonicalFactorization* fact) {
  BOReport rep;
  rep.n = n;
  rep.cutoffs = cutoffs;

  CanonicalFactorization local;
  if (!fact) {
    FactorizationOptions fopts;
    fopts.grid_log2 = cutoffs.grid_log2;
    // The pair (b, c) needs band headroom past the symbol band: its own
    // truncation residue enters the identity directly.
    const int band = cutoffs.band ? cutoffs.band : std::max(256, 2 * sym.band());
    local = canonical_factorization(sym, band, fopts);
    fact = &local;
  }
  rep.det_tn = determinant(toeplitz_section(sym, n));
  rep.g = G_of(sym, cutoffs.grid_log2);

  const int extent = std::min(hankel_product_row_extent(fact->b_sym),
                              hankel_product_col_extent(fact->c_sym));
  // Up to 1024 the finite determinant is cheap, and reaching the full
  // extent makes it exact for band-limited pairs.
  int M = cutoffs.section ? cutoffs.section
                          : std::min(extent, std::max(1024, 2 * (n + 1)));
  M = std::max(M, n + 2);
  rep.cutoffs.section = M;
  rep.cutoffs.band = fact->b_sym.band();

  // Shared section: truncation tails cancel between E and the correction.
  SectionDet full = hankel_det(fact->b_sym, fact->c_sym, M);
  SectionDet corr = hankel_det(fact->b_sym, fact->c_sym, M, n);
  rep.e = 1.0 / full.det;
  rep.det_correction = corr.det;

  rep.product_trace_norm =
      product_trace_norm_upper(fact->b_sym, fact->c_sym, n, 128);
  if (rep.product_trace_norm < 1.0)
    rep.logdet_bound = 2.0 * rep.product_trace_norm;

  const cplx log_g = std::log(rep.g);
  const cplx rhs = std::exp(double(n + 1) * log_g) * rep.e * rep.det_correction;
  rep.rel_error = std::abs(rep.det_tn - rhs) / std::abs(rep.det_tn);
  return rep;
}

void write_bo_csv_header(std::ostream& out) {
  out << "n,det_tn_re,det_tn_im,g_re,g_im,e_re,e_im,det_corr_re,det_corr_im,"
         "rel_error,trace_norm,band,section,grid_log2\n";
}

void append_bo_csv(std::ostream& out, const BOReport& rep) {
  out << rep.n << ',' << fmt17(rep.det_tn.real()) << ',' << fmt17(rep.det_tn.imag())
      << ',' << fmt17(rep.g.real()) << ',' << fmt17(rep.g.imag()) << ','
      << fmt17(rep.e.real()) << ',' << fmt17(rep.e.imag()) << ','
      << fmt17(rep.det_correction.real()) << ',' << fmt17(rep.det_correction.imag())
      << ',' << fmt17(rep.rel_error) << ',' << fmt17(rep.product_trace_norm)
      << ',' << rep.cutoffs.band << ',' << rep.cutoffs.section << ','
      << rep.cutoffs.grid_log2 << '\n';
}

}  // namespace szego
