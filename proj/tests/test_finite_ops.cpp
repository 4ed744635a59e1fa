#include <doctest.h>

#include <cmath>
#include <sstream>

#include "szego/bounds.hpp"
#include "szego/sections.hpp"
#include "szego/trace_asymptotics.hpp"
#include "szego/wiener_hopf.hpp"

using namespace szego;

TEST_CASE("toeplitz sections read off the coefficients") {
  FourierSymbol s1 = catalog("S1");
  DenseOperator t1 = toeplitz_section(s1, 1);
  CHECK(t1.label() == OpLabel::ToeplitzSection);
  CHECK(std::abs(t1(0, 0) - 1.25) < 1e-14);
  CHECK(std::abs(t1(0, 1) + 0.5) < 1e-14);
  CHECK(std::abs(t1(1, 0) + 0.5) < 1e-14);
  CHECK(std::abs(t1(1, 1) - 1.25) < 1e-14);

  DenseOperator tc = toeplitz_section(FourierSymbol::constant_scalar(2.5), 4);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      CHECK(std::abs(tc(i, j) - (i == j ? 2.5 : 0.0)) < 1e-14);

  DenseOperator t3 = toeplitz_section(catalog("S3"), 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? 3.0 : (std::abs(i - j) == 1 ? 1.0 : 0.0);
      CHECK(std::abs(t3(i, j) - want) < 1e-14);
    }
}

TEST_CASE("toeplitz section of a hermitian-valued symbol is Hermitian") {
  for (const char* name : {"S1", "S3", "S4"}) {
    FourierSymbol sym = catalog(name, name == std::string("S4")
                                          ? CatalogParams{{"K", "64"}}
                                          : CatalogParams{});
    REQUIRE(sym.is_hermitian());
    DenseOperator t = toeplitz_section(sym, 6);
    for (int i = 0; i < t.rows(); ++i)
      for (int j = 0; j < t.cols(); ++j)
        CHECK(std::abs(t(i, j) - std::conj(t(j, i))) < 1e-14);
  }
}

TEST_CASE("hankel sections, plain and reflected") {
  DenseOperator h3 = hankel_section(catalog("S3"), 2, 2);
  CHECK(std::abs(h3(0, 0) - 1.0) < 1e-14);  // ahat(1)
  CHECK(std::abs(h3(0, 1)) < 1e-14);
  CHECK(std::abs(h3(1, 0)) < 1e-14);
  CHECK(std::abs(h3(1, 1)) < 1e-14);

  DenseOperator h1 = hankel_section(catalog("S1"), 3, 3, true);
  CHECK(h1.label() == OpLabel::HankelReflected);
  CHECK(std::abs(h1(0, 0) + 0.5) < 1e-14);  // ahat(-1)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j > 0) CHECK(std::abs(h1(i, j)) < 1e-14);

  // b-symbol of S1: bhat(k) = r^k (1 - rs) for k >= 1.
  const double r = 0.5, s = 0.5, rs = r * s;
  CanonicalFactorization fact = canonical_factorization(catalog("S1"), 128);
  DenseOperator hb = hankel_section(fact.b_sym, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(hb(i, j) - std::pow(r, i + j + 1) * (1 - rs)) < 1e-12);
}

TEST_CASE("truncated hankel product: closed forms") {
  const double r = 0.5, s = 0.5, rs = r * s;
  CanonicalFactorization fact = canonical_factorization(catalog("S1"), 128);
  // Full product entry (i,j) = (1-rs) r^{i+1} s^{j+1}.
  HankelProductBlock blk = hankel_product_block(fact.b_sym, fact.c_sym, 0, 4, 0, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(blk.op(i, j) -
                     (1 - rs) * std::pow(r, i + 1) * std::pow(s, j + 1)) < 1e-12);
  CHECK(std::abs(blk.op(0, 0) - 0.1875) < 1e-12);
  CHECK(blk.tail_certified);

  // Constants have no Hankel part.
  FourierSymbol c2 = FourierSymbol::constant_scalar(2.0);
  CHECK(hankel_product_row_extent(c2) == 0);
  HankelProductBlock zero = hankel_product_block(c2, c2, 0, 3, 0, 3);
  CHECK(zero.op.max_abs() == 0.0);
}

TEST_CASE("truncated hankel product: inner cutoff certification") {
  CanonicalFactorization fact = canonical_factorization(catalog("S1"), 128);
  HankelProductOptions opts;
  opts.inner_cutoff = 200;  // beyond the numeric support: certified
  HankelProductBlock full = truncated_hankel_product(fact.b_sym, fact.c_sym, 0, 8, opts);
  CHECK(full.tail_certified);
  opts.inner_cutoff = 2;  // visibly truncated
  HankelProductBlock cut = truncated_hankel_product(fact.b_sym, fact.c_sym, 0, 8, opts);
  CHECK_FALSE(cut.tail_certified);
  CHECK(cut.tail_bound > 0.0);
  // The windowed sum matches a direct evaluation of sum_{l<=2}: the block
  // entry (0,0) is K_{1,1} = sum_l bhat(l+2) chat(-l-2).
  const double r = 0.5, s = 0.5, rs = r * s;
  cplx direct = 0.0;
  for (int l = 0; l <= 2; ++l)
    direct += (1 - rs) * (1 - rs) * std::pow(rs, l + 2);
  CHECK(std::abs(cut.op(0, 0) - direct) < 1e-12);
}

TEST_CASE("schatten norm of the rank-one S1 truncation") {
  const double r = 0.5, s = 0.5, rs = r * s;
  CanonicalFactorization fact = canonical_factorization(catalog("S1"), 128);
  HankelProductBlock blk = truncated_hankel_product(fact.b_sym, fact.c_sym, 0, 64);
  const double want = (1 - rs) * std::pow(rs, 2) / std::sqrt((1 - r * r) * (1 - s * s));
  CHECK(schatten_norm(blk.op).trace_norm == doctest::Approx(want).epsilon(1e-9));
  CHECK(want == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("determinants of S1 sections match the cofactor recursion") {
  FourierSymbol s1 = catalog("S1");
  const cplx a0 = s1.scalar_coeff(0);
  const cplx offprod = s1.scalar_coeff(1) * s1.scalar_coeff(-1);
  cplx d_prev = 1.0, d_cur = a0;
  for (int n = 0; n <= 10; ++n) {
    CHECK(std::abs(determinant(toeplitz_section(s1, n)) - d_cur) <
          1e-12 * std::abs(d_cur));
    // Geometric closed form (1-(rs)^{n+2})/(1-rs).
    const double rs = 0.25;
    CHECK(std::abs(d_cur - (1.0 - std::pow(rs, n + 2)) / (1.0 - rs)) < 1e-12);
    const cplx d_next = a0 * d_cur - offprod * d_prev;
    d_prev = d_cur;
    d_cur = d_next;
  }
  CHECK(std::abs(determinant(toeplitz_section(s1, 1)) - 1.3125) < 1e-12);
}

TEST_CASE("trace_f: polynomial path") {
  FourierSymbol s3 = catalog("S3");
  AnalyticFunction fz = AnalyticFunction::polynomial({0.0, 1.0}, "z");
  AnalyticFunction fz2 = AnalyticFunction::polynomial({0.0, 0.0, 1.0}, "z^2");
  // f = z: sum of diagonal entries.
  CHECK(std::abs(trace_f(toeplitz_section(s3, 4), fz) - 15.0) < 1e-12);
  // f = z^2 on T_n(S3): 11 n + 9.
  for (int n = 1; n <= 8; ++n)
    CHECK(std::abs(trace_f(toeplitz_section(s3, n), fz2) -
                   double(11 * n + 9)) < 1e-10);
  // z^2 equals trace(A A) directly.
  DenseOperator t4 = toeplitz_section(s3, 4);
  CHECK(std::abs(trace_f(t4, fz2) - matmul(t4, t4).trace()) < 1e-12);
}

TEST_CASE("trace_f: resolvent path agrees with the polynomial path") {
  FourierSymbol s3 = catalog("S3");
  AnalyticFunction fz2 = AnalyticFunction::polynomial({0.0, 0.0, 1.0}, "z^2");
  Contour circle = Contour::circle(3.0, 2.5, 64);
  const cplx got = trace_f(toeplitz_section(s3, 2), fz2, circle);
  CHECK(std::abs(got - 31.0) < 1e-9);
}

TEST_CASE("trace_f: rational function via resolvent quadrature") {
  // f(z) = 1/(z - 7) on T_2(S3); oracle from the 3 eigenvalues
  // 3, 3 +- sqrt(2) of the tridiagonal section.
  FourierSymbol s3 = catalog("S3");
  AnalyticFunction f = AnalyticFunction::rational({}, {{cplx(7.0, 0.0), 1, 1.0}});
  Contour circle = Contour::circle(3.0, 2.5, 128);
  const cplx got = trace_f(toeplitz_section(s3, 2), f, circle);
  const double want = 1.0 / (3.0 - 7.0) + 1.0 / (3.0 + std::sqrt(2.0) - 7.0) +
                      1.0 / (3.0 - std::sqrt(2.0) - 7.0);
  CHECK(std::abs(got - want) < 1e-9);
  // A pole close to the spectrum is rejected with a distance report.
  AnalyticFunction bad = AnalyticFunction::rational({}, {{cplx(3.0, 1e-9), 1, 1.0}});
  CHECK_THROWS_WITH_AS(trace_f(toeplitz_section(s3, 2), bad, circle),
                       doctest::Contains("distance"), NumericalError);
}

TEST_CASE("holder inequality on random conformable pairs") {
  Rng rng(0x4014e12ull);
  for (int trial = 0; trial < 100; ++trial) {
    Rng trial_rng(rng.next_u64());
    const int m = 2 + int(trial_rng.next_u64() % 11);
    const int k = 2 + int(trial_rng.next_u64() % 11);
    const int l = 2 + int(trial_rng.next_u64() % 11);
    BoundCheck check = check_holder(random_matrix(trial_rng, m, k),
                                    random_matrix(trial_rng, k, l));
    CHECK(check.rhs - check.lhs >= -1e-10);
  }
  // Equality cases.
  BoundCheck id = check_holder(DenseOperator::identity(2), DenseOperator::identity(2));
  CHECK(id.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(id.rhs == doctest::Approx(2.0).epsilon(1e-12));
  DenseOperator e00(2, 2), e01(2, 2);
  e00(0, 0) = 1.0;
  e01(0, 1) = 1.0;
  BoundCheck rank1 = check_holder(e00, e01);
  CHECK(rank1.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rank1.rhs == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dense operator dump uses 17 significant digits") {
  DenseOperator a(1, 2);
  a(0, 0) = cplx(1.25, 0.0);
  a(0, 1) = cplx(-0.5, 2.0);
  std::ostringstream out;
  a.dump(out);
  CHECK(out.str() == "1.25+0i -0.5+2i\n");
}
