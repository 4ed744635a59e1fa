#pragma once

#include "szego/dense_operator.hpp"
#include "szego/symbol.hpp"

namespace szego {

/// T_n(a) = (ahat(j-k))_{j,k=0..n}; square of side (n+1) N.
DenseOperator toeplitz_section(const FourierSymbol& sym, int n);

/// H(a) truncation with block (i,j) = ahat(i+j+1), or ahat(-i-j-1) when
/// reflected.
DenseOperator hankel_section(const FourierSymbol& sym, int rows, int cols,
                             bool reflected = false);

struct HankelProductOptions {
  /// Upper limit on the inner summation index l; -1 runs the full sum,
  /// which is exact for band-limited symbols.
  int inner_cutoff = -1;
};

struct HankelProductBlock {
  DenseOperator op;
  bool tail_certified = true;
  double tail_bound = 0.0;  // Cauchy-Schwarz bound on the neglected inner tail
};

/// Rows r0..r1-1, columns c0..c1-1 of H(b) H(c~), whose block entry is
/// sum_{l>=0} bhat(i+l+1) chat(-l-j-1). Runs one suffix-sum pass per
/// diagonal, O((rows+cols) * band) instead of a dense triple product.
HankelProductBlock hankel_product_block(const FourierSymbol& b,
                                        const FourierSymbol& c, int r0, int r1,
                                        int c0, int c1,
                                        const HankelProductOptions& opts = {});

/// Q_n H(b) H(c~) Q_n truncation: the block with row/col indices n+1..M-1.
HankelProductBlock truncated_hankel_product(const FourierSymbol& b,
                                            const FourierSymbol& c, int n,
                                            int M,
                                            const HankelProductOptions& opts = {});

/// Traces of the diagonal blocks (i,i) of H(b) H(c~) for i in [from, to).
std::vector<cplx> hankel_product_diag_trace(const FourierSymbol& b,
                                            const FourierSymbol& c, int from,
                                            int to);

/// Row index past which H(b)H(c~) vanishes identically (plus band of b).
int hankel_product_row_extent(const FourierSymbol& b);
/// Column extent (minus band of c).
int hankel_product_col_extent(const FourierSymbol& c);

}  // namespace szego
