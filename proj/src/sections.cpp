#include "szego/sections.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

DenseOperator toeplitz_section(const FourierSymbol& sym, int n) {
  if (n < 0) throw NumericalError("toeplitz_section: n must be nonnegative");
  const int N = sym.dim();
  DenseOperator op((n + 1) * N, (n + 1) * N, OpLabel::ToeplitzSection);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) {
      const cplx* block = sym.block_ptr(j - k);
      if (!block) continue;
      for (int bi = 0; bi < N; ++bi)
        for (int bj = 0; bj < N; ++bj)
          op(j * N + bi, k * N + bj) = block[std::size_t(bi) * N + bj];
    }
  return op;
}

DenseOperator hankel_section(const FourierSymbol& sym, int rows, int cols,
                             bool reflected) {
  if (rows < 1 || cols < 1)
    throw NumericalError("hankel_section: dimensions must be positive");
  const int N = sym.dim();
  DenseOperator op(rows * N, cols * N,
                   reflected ? OpLabel::HankelReflected : OpLabel::Hankel);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const int k = reflected ? -(i + j + 1) : (i + j + 1);
      const cplx* block = sym.block_ptr(k);
      if (!block) continue;
      for (int bi = 0; bi < N; ++bi)
        for (int bj = 0; bj < N; ++bj)
          op(i * N + bi, j * N + bj) = block[std::size_t(bi) * N + bj];
    }
  return op;
}

namespace {

// Multiplies the N x N blocks at p and q and adds the result into acc.
inline void block_mul_add(const cplx* p, const cplx* q, cplx* acc, int N) {
  if (N == 1) {
    acc[0] += p[0] * q[0];
    return;
  }
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < N; ++l) {
      const cplx v = p[std::size_t(i) * N + l];
      if (v == cplx(0.0, 0.0)) continue;
      const cplx* qrow = q + std::size_t(l) * N;
      cplx* arow = acc + std::size_t(i) * N;
      for (int j = 0; j < N; ++j) arow[j] += v * qrow[j];
    }
}

}  // namespace

int hankel_product_row_extent(const FourierSymbol& b) {
  return b.side_band(Side::Plus);
}

int hankel_product_col_extent(const FourierSymbol& c) {
  return c.side_band(Side::Minus);
}

HankelProductBlock hankel_product_block(const FourierSymbol& b,
                                        const FourierSymbol& c, int r0, int r1,
                                        int c0, int c1,
                                        const HankelProductOptions& opts) {
  if (b.dim() != c.dim())
    throw NumericalError("hankel_product_block: dimension mismatch");
  if (r0 < 0 || c0 < 0 || r1 <= r0 || c1 <= c0)
    throw NumericalError("hankel_product_block: bad index ranges");
  const int N = b.dim();
  const int Kb = b.side_band(Side::Plus);   // bhat(m), 1 <= m <= Kb
  const int Kc = c.side_band(Side::Minus);  // chat(-m), 1 <= m <= Kc
  const int L = opts.inner_cutoff;

  HankelProductBlock result;
  result.op = DenseOperator((r1 - r0) * N, (c1 - c0) * N,
                            OpLabel::ProductTruncation);

  // Entry (i,j) = sum_l bhat(i+l+1) chat(-l-j-1); with m = j+1+l it is the
  // suffix sum S_d(j+1) of P_{m+d} Q_m along the diagonal d = i-j.
  std::vector<cplx> suffix;  // S(v) blocks for v = vlo..m_hi+1
  for (int d = r0 - (c1 - 1); d <= (r1 - 1) - c0; ++d) {
    const int jlo = std::max(c0, r0 - d);
    const int jhi = std::min(c1 - 1, (r1 - 1) - d);
    if (jlo > jhi) continue;
    const int vlo = jlo + 1;
    int m_hi = std::min(Kb - d, Kc);
    if (L >= 0) m_hi = std::min(m_hi, jhi + 1 + L);
    if (m_hi < vlo) continue;  // all-zero diagonal
    const std::size_t len = std::size_t(m_hi - vlo + 2);
    suffix.assign(len * N * N, cplx(0.0, 0.0));
    for (int m = m_hi; m >= vlo; --m) {
      cplx* dst = suffix.data() + std::size_t(m - vlo) * N * N;
      const cplx* nxt = suffix.data() + std::size_t(m - vlo + 1) * N * N;
      std::copy(nxt, nxt + N * N, dst);
      const cplx* P = (m + d >= 1) ? b.block_ptr(m + d) : nullptr;
      const cplx* Q = c.block_ptr(-m);
      if (P && Q) block_mul_add(P, Q, dst, N);
    }
    std::vector<cplx> window(std::size_t(N) * N);
    for (int j = jlo; j <= jhi; ++j) {
      const int i = j + d;
      const cplx* S = suffix.data() + std::size_t(j + 1 - vlo) * N * N;
      const cplx* entry = S;
      if (L >= 0) {
        // Windowed sum S(j+1) - S(j+2+L).
        std::copy(S, S + N * N, window.begin());
        const int vcut = j + 2 + L;
        if (vcut <= m_hi + 1) {
          const cplx* cut = suffix.data() + std::size_t(vcut - vlo) * N * N;
          for (int e = 0; e < N * N; ++e) window[std::size_t(e)] -= cut[e];
        }
        entry = window.data();
      }
      for (int bi = 0; bi < N; ++bi)
        for (int bj = 0; bj < N; ++bj)
          result.op((i - r0) * N + bi, (j - c0) * N + bj) =
              entry[std::size_t(bi) * N + bj];
    }
  }

  if (L >= 0) {
    // Cauchy-Schwarz on the neglected inner tail, evaluated at the
    // corner entry where it is largest.
    const double bt = plain_tail_sq(b, r0 + L + 1, Side::Plus);
    const double ct = plain_tail_sq(c, c0 + L + 1, Side::Minus);
    result.tail_bound = std::sqrt(bt * ct) * double(N);
    const double scale = std::max(result.op.max_abs(), 1e-30);
    result.tail_certified = result.tail_bound < 1e-13 * scale;
  }
  return result;
}

HankelProductBlock truncated_hankel_product(const FourierSymbol& b,
                                            const FourierSymbol& c, int n,
                                            int M,
                                            const HankelProductOptions& opts) {
  if (M <= n + 1)
    throw NumericalError("truncated_hankel_product: need M > n+1");
  return hankel_product_block(b, c, n + 1, M, n + 1, M, opts);
}

std::vector<cplx> hankel_product_diag_trace(const FourierSymbol& b,
                                            const FourierSymbol& c, int from,
                                            int to) {
  if (b.dim() != c.dim())
    throw NumericalError("hankel_product_diag_trace: dimension mismatch");
  const int N = b.dim();
  const int Kb = b.side_band(Side::Plus);
  const int Kc = c.side_band(Side::Minus);
  std::vector<cplx> out(std::size_t(std::max(0, to - from)), cplx(0.0, 0.0));
  if (out.empty()) return out;
  const int m_hi = std::min(Kb, Kc);
  std::vector<cplx> acc(std::size_t(N) * N, cplx(0.0, 0.0));
  // Single suffix pass on the main diagonal (d = 0).
  for (int m = m_hi; m >= from + 1; --m) {
    const cplx* P = b.block_ptr(m);
    const cplx* Q = c.block_ptr(-m);
    if (P && Q) block_mul_add(P, Q, acc.data(), N);
    const int i = m - 1;  // acc now holds S(m) = entry (i,i)
    if (i >= from && i < to) {
      cplx tr = 0.0;
      for (int e = 0; e < N; ++e) tr += acc[std::size_t(e) * N + e];
      out[std::size_t(i - from)] = tr;
    }
  }
  return out;
}

}  // namespace szego
