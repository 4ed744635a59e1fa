#include "szego/wiener_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "szego/fft.hpp"
#include "szego/linalg.hpp"
#include "szego/sections.hpp"

namespace szego {

namespace {

/// Extracts the one-sided part of a symbol built from full-grid bins and
/// reports the largest coefficient magnitude dropped on the other side.
FourierSymbol one_sided(const FourierSymbol& full, Side keep, int band_limit,
                        double* leakage) {
  const int sign = keep == Side::Plus ? 1 : -1;
  FourierSymbol out(full.dim(), std::min(band_limit, full.band()));
  double leak = 0.0;
  for (int k = -full.band(); k <= full.band(); ++k) {
    const bool kept_side = (sign * k) >= 0;
    if (kept_side && std::abs(k) <= out.band()) {
      out.set_coeff(k, full.coeff(k));
    } else {
      const cplx* p = full.block_ptr(k);
      for (int e = 0; e < full.dim() * full.dim(); ++e)
        leak = std::max(leak, std::abs(p[e]));
    }
  }
  if (leakage) *leakage = std::max(*leakage, leak);
  out.trim();
  return out;
}

double grid_residual(const FourierSymbol& a, const FourierSymbol& left,
                     const FourierSymbol& right, int grid_log2) {
  const int band = std::max({a.band(), left.band() + right.band()});
  int m = grid_log2;
  while ((std::size_t(1) << m) <= 2 * std::size_t(band)) ++m;
  GridSamples ga = evaluate_on_grid(a, m);
  GridSamples gl = evaluate_on_grid(left, m);
  GridSamples gr = evaluate_on_grid(right, m);
  const int N = a.dim();
  double worst = 0.0;
  if (N == 1) {
    for (std::size_t j = 0; j < ga.size(); ++j)
      worst = std::max(worst,
                       std::abs(ga.scalar(j) - gl.scalar(j) * gr.scalar(j)));
    return worst;
  }
  for (std::size_t j = 0; j < ga.size(); ++j) {
    DenseOperator diff = matmul(gl.block_matrix(j), gr.block_matrix(j));
    diff -= ga.block_matrix(j);
    diff *= -1.0;
    auto sv = singular_values(diff);
    worst = std::max(worst, sv.empty() ? 0.0 : sv.front());
  }
  return worst;
}

}  // namespace

CanonicalFactorization scalar_canonical(const FourierSymbol& sym,
                                        int band_limit,
                                        const FactorizationOptions& opts) {
  if (sym.dim() != 1)
    throw NumericalError("scalar_canonical: symbol must be scalar");
  // Headroom of 8x the band keeps the aliasing of the slowly decaying
  // log-coefficients below the factor scale.
  int m = opts.grid_log2 ? opts.grid_log2 : 12;
  while ((std::size_t(1) << m) < 8 * std::size_t(std::max(sym.band(), band_limit)))
    ++m;

  GridSamples grid;
  PhaseTrack track;
  for (;; ++m) {
    grid = evaluate_on_grid(sym, m);
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (std::abs(grid.scalar(j)) <= opts.invert_tol)
        throw NumericalError("scalar_canonical: symbol vanishes at theta=" +
                             fmt17(2.0 * kPi * double(j) / double(grid.size())));
    track = track_phase(grid.values);
    if (track.max_step <= kPi / 2.0) break;
    if (m >= opts.max_grid_log2)
      throw NumericalError(
          "scalar_canonical: phase step above pi/2 at the maximum grid");
  }
  const int winding = int(std::lround(track.net / (2.0 * kPi)));
  if (winding != 0)
    throw NumericalError("scalar_canonical: winding " + std::to_string(winding) +
                         " - no canonical factorization (partial index nonzero)");

  const std::size_t M = grid.size();
  std::vector<cplx> log_bins(M);
  for (std::size_t j = 0; j < M; ++j)
    log_bins[j] = cplx(std::log(std::abs(grid.scalar(j))), track.phase[j]);
  fft(log_bins);
  for (auto& v : log_bins) v /= double(M);
  const cplx c0 = log_bins[0];

  // Split the log into strictly one-sided halves on the same grid; the
  // Nyquist bin is shared evenly.
  std::vector<cplx> plus_bins(M, cplx(0.0, 0.0));
  std::vector<cplx> minus_bins(M, cplx(0.0, 0.0));
  for (std::size_t k = 1; k < M / 2; ++k) plus_bins[k] = log_bins[k];
  for (std::size_t k = M / 2 + 1; k < M; ++k) minus_bins[k] = log_bins[k];
  plus_bins[M / 2] = 0.5 * log_bins[M / 2];
  minus_bins[M / 2] = 0.5 * log_bins[M / 2];
  ifft_unnormalized(plus_bins);   // L_+ on the grid
  ifft_unnormalized(minus_bins);  // L_- on the grid

  const cplx ec0 = std::exp(c0);
  std::vector<cplx> up(M), um(M), vp(M), vm(M);
  for (std::size_t j = 0; j < M; ++j) {
    up[j] = std::exp(plus_bins[j]);
    vm[j] = std::exp(minus_bins[j]);
    um[j] = ec0 * vm[j];
    vp[j] = ec0 * up[j];
  }

  CanonicalFactorization fact;
  double leakage = 0.0;
  const int K = band_limit;
  const int extract_band = int(M / 2) - 1;
  auto extract = [&](const std::vector<cplx>& samples, Side side,
                     const char* tag) {
    FourierSymbol full = scalar_from_samples(samples, std::min(K, extract_band), tag);
    return one_sided(full, side, K, &leakage);
  };
  fact.u_plus = extract(up, Side::Plus, "u_plus");
  fact.u_minus = extract(um, Side::Minus, "u_minus");
  fact.v_plus = extract(vp, Side::Plus, "v_plus");
  fact.v_minus = extract(vm, Side::Minus, "v_minus");
  fact.support_leakage = leakage;
  fact.right_residual = grid_residual(sym, fact.u_minus, fact.u_plus, m);
  fact.left_residual = grid_residual(sym, fact.v_plus, fact.v_minus, m);
  return fact;
}

std::pair<FourierSymbol, FourierSymbol> matrix_canonical_right(
    const FourierSymbol& sym, int section_order, int band_limit,
    const FactorizationOptions& opts) {
  const int N = sym.dim();
  int n = section_order > 0 ? section_order
                            : 8 * std::max(1, sym.band());
  std::vector<DenseOperator> prev_coeffs;
  std::vector<DenseOperator> coeffs;
  double change = std::numeric_limits<double>::infinity();
  for (;; n *= 2) {
    DenseOperator tn = toeplitz_section(sym, n);
    LuFactorization lu(tn);
    if (lu.singular())
      throw NumericalError("matrix_canonical_right: singular section at n=" +
                           std::to_string(n));
    // First block column of T_n(a)^{-1}.
    DenseOperator e0((n + 1) * N, N);
    for (int i = 0; i < N; ++i) e0(i, i) = 1.0;
    DenseOperator x = lu.solve(e0);
    // Normalize so that the zeroth block is the identity.
    DenseOperator x0(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) x0(i, j) = x(i, j);
    LuFactorization lu0(x0);
    if (lu0.singular())
      throw NumericalError("matrix_canonical_right: degenerate normalizer");
    DenseOperator x0_inv = lu0.inverse();
    coeffs.clear();
    coeffs.reserve(std::size_t(n) + 1);
    for (int jblk = 0; jblk <= n; ++jblk) {
      DenseOperator blk(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) blk(i, j) = x(jblk * N + i, j);
      coeffs.push_back(matmul(blk, x0_inv));
    }
    if (!prev_coeffs.empty()) {
      change = 0.0;
      for (std::size_t jblk = 0; jblk < prev_coeffs.size(); ++jblk) {
        DenseOperator diff = coeffs[jblk];
        diff -= prev_coeffs[jblk];
        change = std::max(change, diff.max_abs());
      }
      if (change < opts.stabilization_tol) break;
    }
    if (2 * n > opts.max_section_order)
      throw NumericalError(
          "matrix_canonical_right: coefficients did not stabilize by n=" +
          std::to_string(n) + " (last change " + fmt17(change) + ")");
    prev_coeffs = coeffs;
  }

  // coeffs now hold u_+^{-1}; invert back and complete u_- = a u_+^{-1}.
  FourierSymbol uplus_inv(N, int(coeffs.size()) - 1);
  for (std::size_t jblk = 0; jblk < coeffs.size(); ++jblk)
    uplus_inv.set_coeff(int(jblk), coeffs[jblk]);
  uplus_inv.trim(1e-15);
  uplus_inv.set_label("u_plus_inv");

  InvertOptions inv_opts;
  inv_opts.singular_tol = opts.invert_tol;
  FourierSymbol uplus_full = invert(uplus_inv, band_limit, inv_opts);
  double leakage = 0.0;
  FourierSymbol u_plus = one_sided(uplus_full, Side::Plus, band_limit, &leakage);
  u_plus.set_label("u_plus");
  FourierSymbol prod = multiply(sym, uplus_inv, sym.band() + uplus_inv.band());
  FourierSymbol u_minus = one_sided(prod, Side::Minus, band_limit, &leakage);
  u_minus.set_label("u_minus");
  return {u_minus, u_plus};
}

std::pair<FourierSymbol, FourierSymbol> matrix_canonical_left(
    const FourierSymbol& sym, int section_order, int band_limit,
    const FactorizationOptions& opts) {
  // a^T = w_- w_+ implies a = w_+^T w_-^T, an exact left factorization
  // with the plus factor first; transposition preserves supports and the
  // identity normalization.
  auto [w_minus, w_plus] =
      matrix_canonical_right(transpose(sym), section_order, band_limit, opts);
  FourierSymbol v_plus = transpose(w_plus);
  v_plus.set_label("v_plus");
  FourierSymbol v_minus = transpose(w_minus);
  v_minus.set_label("v_minus");
  return {v_plus, v_minus};
}

std::pair<FourierSymbol, FourierSymbol> bo_pair(
    const CanonicalFactorization& fact, int band_limit,
    const FactorizationOptions& opts) {
  if (std::max(fact.right_residual, fact.left_residual) > 1e-8)
    throw NumericalError("bo_pair: factorization residual above 1e-8");
  InvertOptions inv_opts;
  inv_opts.singular_tol = opts.invert_tol;
  FourierSymbol uplus_inv = invert(fact.u_plus, band_limit, inv_opts);
  FourierSymbol uminus_inv = invert(fact.u_minus, band_limit, inv_opts);
  FourierSymbol b = multiply(fact.v_minus, uplus_inv, band_limit);
  b.set_label("b");
  FourierSymbol c = multiply(uminus_inv, fact.v_plus, band_limit);
  c.set_label("c");
  // Spot-check T(b)T(c) = I - H(b)H(c~) where the section is cheap. The
  // residual of the identity equals the coefficient residue of b c - 1,
  // so the gate scales with the band truncation of the pair.
  if (band_limit <= 512) {
    const double id_res = bo_pair_identity_residual(b, c, 64);
    FourierSymbol bc = multiply(b, c, 64);
    double pair_res = 0.0;
    for (int k = -bc.band(); k <= bc.band(); ++k) {
      DenseOperator diff = bc.coeff(k);
      if (k == 0)
        for (int d = 0; d < bc.dim(); ++d) diff(d, d) -= 1.0;
      pair_res = std::max(pair_res, diff.max_abs());
    }
    if (id_res > std::max(1e-8, 10.0 * pair_res))
      throw NumericalError("bo_pair: identity T(b)T(c) = I - H(b)H(c~) off by " +
                           fmt17(id_res));
  }
  return {b, c};
}

double bo_pair_identity_residual(const FourierSymbol& b, const FourierSymbol& c,
                                 int section) {
  const int N = b.dim();
  // Section of the infinite product T(b)T(c): entry (i,j) blocks
  // sum_{l>=0} bhat(i-l) chat(l-j), a finite sum for band-limited symbols.
  DenseOperator tbtc(section * N, section * N);
  for (int i = 0; i < section; ++i)
    for (int j = 0; j < section; ++j) {
      const int llo = std::max({0, i - b.band(), j - c.band()});
      const int lhi = std::min(i + b.band(), j + c.band());
      DenseOperator acc(N, N);
      for (int l = llo; l <= lhi; ++l) {
        const cplx* pb = b.block_ptr(i - l);
        const cplx* pc = c.block_ptr(l - j);
        if (!pb || !pc) continue;
        for (int bi = 0; bi < N; ++bi)
          for (int bl = 0; bl < N; ++bl) {
            const cplx v = pb[std::size_t(bi) * N + bl];
            if (v == cplx(0.0, 0.0)) continue;
            for (int bj = 0; bj < N; ++bj)
              acc(bi, bj) += v * pc[std::size_t(bl) * N + bj];
          }
      }
      for (int bi = 0; bi < N; ++bi)
        for (int bj = 0; bj < N; ++bj)
          tbtc(i * N + bi, j * N + bj) = acc(bi, bj);
    }
  HankelProductBlock hb = hankel_product_block(b, c, 0, section, 0, section);
  DenseOperator rhs = DenseOperator::identity(section * N);
  rhs -= hb.op;
  rhs -= tbtc;
  return rhs.max_abs();
}

ResidualReport residual(const FourierSymbol& sym,
                        const CanonicalFactorization& fact, int grid_log2) {
  ResidualReport rep;
  const int m = grid_log2 ? grid_log2 : default_grid_log2(sym, 12);
  rep.right = grid_residual(sym, fact.u_minus, fact.u_plus, m);
  rep.left = grid_residual(sym, fact.v_plus, fact.v_minus, m);
  double leak = fact.support_leakage;
  auto scan = [&](const FourierSymbol& f, Side wrong) {
    const int sign = wrong == Side::Minus ? -1 : 1;
    const int ne = f.dim() * f.dim();
    for (int k = 1; k <= f.band(); ++k) {
      const cplx* p = f.block_ptr(sign * k);
      if (p)
        for (int e = 0; e < ne; ++e) leak = std::max(leak, std::abs(p[e]));
    }
  };
  scan(fact.u_plus, Side::Minus);
  scan(fact.v_plus, Side::Minus);
  scan(fact.u_minus, Side::Plus);
  scan(fact.v_minus, Side::Plus);
  rep.support_leakage = leak;
  return rep;
}

CanonicalFactorization canonical_factorization(
    const FourierSymbol& sym, int band_limit,
    const FactorizationOptions& opts) {
  CanonicalFactorization fact;
  if (sym.dim() == 1) {
    fact = scalar_canonical(sym, band_limit, opts);
  } else {
    auto [u_minus, u_plus] =
        matrix_canonical_right(sym, opts.section_order, band_limit, opts);
    auto [v_plus, v_minus] =
        matrix_canonical_left(sym, opts.section_order, band_limit, opts);
    fact.u_minus = u_minus;
    fact.u_plus = u_plus;
    fact.v_plus = v_plus;
    fact.v_minus = v_minus;
    const int m = opts.grid_log2 ? opts.grid_log2 : default_grid_log2(sym, 12);
    fact.right_residual = grid_residual(sym, fact.u_minus, fact.u_plus, m);
    fact.left_residual = grid_residual(sym, fact.v_plus, fact.v_minus, m);
  }
  auto [b, c] = bo_pair(fact, band_limit, opts);
  fact.b_sym = b;
  fact.c_sym = c;
  fact.bo_pair_set = true;
  return fact;
}

void write_factorization(const CanonicalFactorization& fact,
                         std::ostream& out) {
  write_symbol(fact.u_minus, out);
  write_symbol(fact.u_plus, out);
  write_symbol(fact.v_plus, out);
  write_symbol(fact.v_minus, out);
  out << "residuals right=" << fmt17(fact.right_residual)
      << " left=" << fmt17(fact.left_residual)
      << " support_leakage=" << fmt17(fact.support_leakage) << '\n';
}

}  // namespace szego
