#include <doctest.h>

#include <cmath>
#include <sstream>

#include "szego/szego_constants.hpp"

using namespace szego;

TEST_CASE("G of constants and diagonal blocks") {
  CHECK(std::abs(G_of(FourierSymbol::constant_scalar(2.0)) - 2.0) < 1e-12);
  FourierSymbol diag = catalog("S5", {{"variant", "diag_const"},
                                      {"c1", "2"}, {"c2", "3"}});
  CHECK(std::abs(G_of(diag) - 6.0) < 1e-12);
}

TEST_CASE("G of S1 is 1: the mean of log(1 - r e^{i theta}) vanishes") {
  CHECK(std::abs(G_of(catalog("S1")) - 1.0) < 1e-12);
  // Quadrature oracle at another (r, s).
  FourierSymbol s1 = catalog("S1", {{"r", "0.3"}, {"s", "0.7"}});
  CHECK(std::abs(G_of(s1) - 1.0) < 1e-12);
}

TEST_CASE("G rejects winding symbols") {
  CHECK_THROWS_WITH_AS(G_of(catalog("chi")), doctest::Contains("winding"),
                       NumericalError);
}

TEST_CASE("Abel-Poisson fallback extrapolates toward the r=1 mean") {
  // The regularized path is only exact in the limit; the quadratic
  // extrapolation in 1-r lands within ~1e-4 on smooth symbols.
  CHECK(std::abs(G_of_abel(catalog("S1")) - 1.0) < 1e-3);
  CHECK(std::abs(G_of_abel(FourierSymbol::constant_scalar(2.0)) - 2.0) < 1e-12);
  CHECK(std::abs(G_of_abel(catalog("S3")) - G_of(catalog("S3"))) < 1e-3);
}

TEST_CASE("E of a constant symbol is 1") {
  CanonicalFactorization fact =
      canonical_factorization(FourierSymbol::constant_scalar(3.0), 16);
  EResult e = E_of(FourierSymbol::constant_scalar(3.0), fact, 8);
  CHECK(std::abs(e.value - 1.0) < 1e-12);
  CHECK(e.route_gap < 1e-10);
}

TEST_CASE("E of S1 equals 1/(1-rs) with both routes agreeing") {
  for (double r : {0.3, 0.5, 0.7})
    for (double s : {0.3, 0.5, 0.7}) {
      std::ostringstream rs, ss;
      rs << r;
      ss << s;
      FourierSymbol sym = catalog("S1", {{"r", rs.str()}, {"s", ss.str()}});
      CanonicalFactorization fact = canonical_factorization(sym, 256);
      EResult e = E_of(sym, fact, 64);
      CHECK(std::abs(e.value - 1.0 / (1.0 - r * s)) < 1e-8);
      CHECK(e.route_gap < 1e-8);
    }
}

TEST_CASE("E is multiplicative over diagonal blocks") {
  FourierSymbol diag = catalog("S5", {{"variant", "diag_s1_s1"}});
  CanonicalFactorization fact = canonical_factorization(diag, 128);
  EResult e = E_of(diag, fact, 64);
  CHECK(std::abs(e.value - 16.0 / 9.0) < 1e-7);
  // G multiplicativity on the same construction.
  CHECK(std::abs(G_of(diag) - 1.0) < 1e-10);
}

TEST_CASE("bo_verify on S1: exact geometric identities") {
  FourierSymbol s1 = catalog("S1");
  CanonicalFactorization fact = canonical_factorization(s1, 256);
  BOCutoffs cutoffs;

  BOReport r0 = bo_verify(s1, 0, cutoffs, &fact);
  CHECK(std::abs(r0.det_tn - 1.25) < 1e-12);
  CHECK(std::abs(r0.g - 1.0) < 1e-10);
  CHECK(std::abs(r0.e - 4.0 / 3.0) < 1e-9);
  CHECK(std::abs(r0.det_correction - 0.9375) < 1e-10);
  CHECK(r0.rel_error < 1e-12);

  BOReport r4 = bo_verify(s1, 4, cutoffs, &fact);
  const double rs = 0.25;
  CHECK(std::abs(r4.det_tn - (1 - std::pow(rs, 6)) / 0.75) < 1e-12);
  CHECK(std::abs(r4.det_correction - (1 - std::pow(rs, 6))) < 1e-10);
  CHECK(r4.rel_error < 1e-10);
}

TEST_CASE("bo_verify on a constant: powers only") {
  FourierSymbol two = FourierSymbol::constant_scalar(2.0);
  CanonicalFactorization fact = canonical_factorization(two, 16);
  BOReport rep = bo_verify(two, 7, {}, &fact);
  CHECK(std::abs(rep.det_tn - 256.0) < 1e-10);
  CHECK(std::abs(rep.g - 2.0) < 1e-12);
  CHECK(std::abs(rep.e - 1.0) < 1e-12);
  CHECK(std::abs(rep.det_correction - 1.0) < 1e-12);
  CHECK(rep.rel_error < 1e-12);
}

TEST_CASE("bo identity holds across the catalog") {
  struct Case {
    const char* name;
    CatalogParams params;
    double tol;
  };
  const std::vector<Case> cases = {
      {"S1", {}, 1e-8},
      {"S1", {{"r", "0.7"}, {"s", "0.3"}}, 1e-8},
      {"S2", {{"value", "2.5"}}, 1e-8},
      {"S3", {}, 1e-8},
      {"S4", {{"K", "512"}}, 1e-8},
      {"S5", {{"variant", "diag_s1_s1"}}, 1e-8},
      {"S5", {{"variant", "diag_const"}}, 1e-8},
  };
  for (const auto& test_case : cases) {
    FourierSymbol sym = catalog(test_case.name, test_case.params);
    const int band = std::max(256, 2 * sym.band());
    CanonicalFactorization fact = canonical_factorization(sym, band);
    for (int n : {0, 1, 2, 4, 8, 16, 32, 64}) {
      BOReport rep = bo_verify(sym, n, {}, &fact);
      INFO(sym.label(), " n=", n, " relError=", rep.rel_error);
      CHECK(rep.rel_error < test_case.tol);
    }
  }
}

TEST_CASE("det correction approaches 1 within the log-det envelope") {
  FourierSymbol s1 = catalog("S1");
  CanonicalFactorization fact = canonical_factorization(s1, 256);
  for (int n : {0, 2, 4, 8, 16}) {
    BOReport rep = bo_verify(s1, n, {}, &fact);
    REQUIRE(rep.product_trace_norm < 1.0);
    CHECK(std::abs(rep.det_correction - 1.0) <=
          std::exp(2.0 * rep.product_trace_norm) - 1.0 + 1e-12);
    CHECK(rep.logdet_bound == 2.0 * rep.product_trace_norm);
  }
}

TEST_CASE("bo csv rows are appendable and 17-digit stable") {
  FourierSymbol s1 = catalog("S1");
  CanonicalFactorization fact = canonical_factorization(s1, 64);
  BOReport rep = bo_verify(s1, 1, {}, &fact);
  std::ostringstream out;
  write_bo_csv_header(out);
  append_bo_csv(out, rep);
  CHECK(out.str().find("n,det_tn_re") == 0);
  CHECK(out.str().find("\n1,") != std::string::npos);
}
