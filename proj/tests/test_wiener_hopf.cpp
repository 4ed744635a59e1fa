#include <doctest.h>

#include <cmath>
#include <sstream>

#include "szego/szego_constants.hpp"
#include "szego/wiener_hopf.hpp"

using namespace szego;

TEST_CASE("scalar_canonical recovers the factored form of S1") {
  FourierSymbol s1 = catalog("S1");
  CanonicalFactorization fact = scalar_canonical(s1, 128);
  CHECK(fact.right_residual < 1e-9);
  CHECK(fact.left_residual < 1e-9);
  // u_- = 1 - s/t, u_+ = 1 - r t.
  CHECK(std::abs(fact.u_plus.scalar_coeff(0) - 1.0) < 1e-10);
  CHECK(std::abs(fact.u_plus.scalar_coeff(1) + 0.5) < 1e-10);
  CHECK(std::abs(fact.u_minus.scalar_coeff(0) - 1.0) < 1e-10);
  CHECK(std::abs(fact.u_minus.scalar_coeff(-1) + 0.5) < 1e-10);
  for (int k = 2; k <= 16; ++k) {
    CHECK(std::abs(fact.u_plus.scalar_coeff(k)) < 1e-10);
    CHECK(std::abs(fact.u_minus.scalar_coeff(-k)) < 1e-10);
  }
  // Scalar factors commute, so v mirrors u here.
  CHECK(std::abs(fact.v_plus.scalar_coeff(1) + 0.5) < 1e-10);
  CHECK(std::abs(fact.v_minus.scalar_coeff(-1) + 0.5) < 1e-10);
}

TEST_CASE("scalar_canonical on constants honors the c0 convention") {
  FourierSymbol four = FourierSymbol::constant_scalar(4.0);
  CanonicalFactorization fact = scalar_canonical(four, 16);
  CHECK(std::abs(fact.u_minus.scalar_coeff(0) - 4.0) < 1e-12);
  CHECK(std::abs(fact.u_plus.scalar_coeff(0) - 1.0) < 1e-12);
  CHECK(std::abs(fact.v_plus.scalar_coeff(0) - 4.0) < 1e-12);
  CHECK(std::abs(fact.v_minus.scalar_coeff(0) - 1.0) < 1e-12);
}

TEST_CASE("scalar_canonical rejects nonzero winding") {
  CHECK_THROWS_WITH_AS(scalar_canonical(catalog("chi"), 16),
                       doctest::Contains("winding 1"), NumericalError);
}

TEST_CASE("factor supports are one-sided") {
  for (const char* name : {"S1", "S3"}) {
    CanonicalFactorization fact = scalar_canonical(catalog(name), 64);
    for (int k = 1; k <= fact.u_plus.band(); ++k) {
      CHECK(std::abs(fact.u_plus.scalar_coeff(-k)) < 1e-10);
      CHECK(std::abs(fact.v_plus.scalar_coeff(-k)) < 1e-10);
      CHECK(std::abs(fact.u_minus.scalar_coeff(k)) < 1e-10);
      CHECK(std::abs(fact.v_minus.scalar_coeff(k)) < 1e-10);
    }
    CHECK(fact.support_leakage < 1e-10);
  }
}

TEST_CASE("u_minus zeroth coefficient equals G(a) under the convention") {
  for (const char* name : {"S1", "S3"}) {
    FourierSymbol sym = catalog(name);
    CanonicalFactorization fact = scalar_canonical(sym, 64);
    const cplx g = G_of(sym);
    CHECK(std::abs(fact.u_minus.scalar_coeff(0) - g) < 1e-8);
  }
}

TEST_CASE("perturbation stability of the scalar factors") {
  const double delta = 1e-4;
  FourierSymbol s1 = catalog("S1");
  FourierSymbol chi2 = catalog("chi", {{"k", "2"}});
  FourierSymbol perturbed = add(s1, chi2, delta);
  CanonicalFactorization f0 = scalar_canonical(s1, 64);
  CanonicalFactorization f1 = scalar_canonical(perturbed, 64);
  double worst = 0.0;
  for (int k = -64; k <= 64; ++k) {
    worst = std::max(worst, std::abs(f1.u_plus.scalar_coeff(k) -
                                     f0.u_plus.scalar_coeff(k)));
    worst = std::max(worst, std::abs(f1.u_minus.scalar_coeff(k) -
                                     f0.u_minus.scalar_coeff(k)));
  }
  CHECK(worst <= 100.0 * delta);
  CHECK(worst > 0.0);
}

TEST_CASE("matrix_canonical_right: upper shift is already a minus factor") {
  FourierSymbol a = catalog("S5", {{"variant", "upper_shift"}});
  auto [u_minus, u_plus] = matrix_canonical_right(a, 0, 64);
  // u_+ = I.
  CHECK(std::abs(u_plus.coeff(0)(0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(u_plus.coeff(0)(1, 1) - 1.0) < 1e-10);
  CHECK(u_plus.side_band(Side::Plus) == 0);
  // u_- = a.
  CHECK(std::abs(u_minus.coeff(-1)(0, 1) - 1.0) < 1e-10);
  CHECK(std::abs(u_minus.coeff(0)(0, 0) - 1.0) < 1e-10);
}

TEST_CASE("matrix_canonical_right: block diagonal reduces to scalars") {
  FourierSymbol a = catalog("S5", {{"variant", "diag_s1_one"}});
  auto [u_minus, u_plus] = matrix_canonical_right(a, 0, 64);
  CanonicalFactorization scalar = scalar_canonical(catalog("S1"), 64);
  for (int k = 0; k <= 8; ++k) {
    CHECK(std::abs(u_plus.coeff(k)(0, 0) - scalar.u_plus.scalar_coeff(k)) < 1e-8);
    CHECK(std::abs(u_minus.coeff(-k)(0, 0) - scalar.u_minus.scalar_coeff(-k)) < 1e-8);
    CHECK(std::abs(u_plus.coeff(k)(0, 1)) < 1e-10);
    CHECK(std::abs(u_plus.coeff(k)(1, 0)) < 1e-10);
  }
  CHECK(std::abs(u_plus.coeff(0)(1, 1) - 1.0) < 1e-10);
}

TEST_CASE("scalar and matrix routes agree on N=1") {
  FourierSymbol s1 = catalog("S1");
  CanonicalFactorization scalar = scalar_canonical(s1, 64);
  auto [u_minus, u_plus] = matrix_canonical_right(s1, 0, 64);
  for (int k = -16; k <= 16; ++k) {
    CHECK(std::abs(u_plus.scalar_coeff(k) - scalar.u_plus.scalar_coeff(k)) < 1e-8);
    CHECK(std::abs(u_minus.scalar_coeff(k) - scalar.u_minus.scalar_coeff(k)) < 1e-8);
  }
}

TEST_CASE("matrix_canonical_left: lower shift is already a plus factor") {
  FourierSymbol a = catalog("S5", {{"variant", "lower_shift"}});
  auto [v_plus, v_minus] = matrix_canonical_left(a, 0, 64);
  CHECK(std::abs(v_plus.coeff(1)(1, 0) - 1.0) < 1e-10);
  CHECK(std::abs(v_plus.coeff(0)(0, 0) - 1.0) < 1e-10);
  CHECK(v_minus.side_band(Side::Minus) == 0);
  CHECK(std::abs(v_minus.coeff(0)(0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(v_minus.coeff(0)(1, 1) - 1.0) < 1e-10);
}

TEST_CASE("matrix_canonical_left on scalars and diagonal blocks") {
  auto [v_plus, v_minus] = matrix_canonical_left(catalog("S1"), 0, 64);
  CHECK(std::abs(v_plus.scalar_coeff(1) + 0.5) < 1e-8);
  CHECK(std::abs(v_plus.scalar_coeff(0) - 1.0) < 1e-8);
  CHECK(std::abs(v_minus.scalar_coeff(-1) + 0.5) < 1e-8);

  FourierSymbol diag = catalog("S5", {{"variant", "diag_s1_s1"}});
  auto [vp, vm] = matrix_canonical_left(diag, 0, 64);
  CHECK(std::abs(vp.coeff(1)(0, 0) + 0.5) < 1e-8);
  CHECK(std::abs(vp.coeff(1)(1, 1) + 0.5) < 1e-8);
  CHECK(std::abs(vp.coeff(1)(0, 1)) < 1e-10);
  ResidualReport res;
  {
    CanonicalFactorization f;
    f.v_plus = vp;
    f.v_minus = vm;
    auto [um2, up2] = matrix_canonical_right(diag, 0, 64);
    f.u_minus = um2;
    f.u_plus = up2;
    res = residual(diag, f);
  }
  CHECK(res.right < 1e-8);
  CHECK(res.left < 1e-8);
}

TEST_CASE("bo_pair produces the geometric pair for S1") {
  const double r = 0.5, s = 0.5, rs = r * s;
  FourierSymbol s1 = catalog("S1");
  CanonicalFactorization fact = scalar_canonical(s1, 128);
  auto [b, c] = bo_pair(fact, 128);
  CHECK(std::abs(b.scalar_coeff(1) - r * (1 - rs)) < 1e-10);
  CHECK(std::abs(b.scalar_coeff(1) - 0.375) < 1e-10);
  for (int k = 1; k <= 8; ++k) {
    CHECK(std::abs(b.scalar_coeff(k) - std::pow(r, k) * (1 - rs)) < 1e-10);
    CHECK(std::abs(c.scalar_coeff(-k) - std::pow(s, k) * (1 - rs)) < 1e-10);
  }
  CHECK(bo_pair_identity_residual(b, c, 64) < 1e-10);
}

TEST_CASE("bo_pair on constants and diagonal blocks") {
  CanonicalFactorization cf = scalar_canonical(FourierSymbol::constant_scalar(4.0), 16);
  auto [b, c] = bo_pair(cf, 16);
  CHECK(std::abs(b.scalar_coeff(0) - 1.0) < 1e-12);
  CHECK(std::abs(c.scalar_coeff(0) - 1.0) < 1e-12);
  CHECK(b.side_band(Side::Plus) == 0);

  CanonicalFactorization df = canonical_factorization(
      catalog("S5", {{"variant", "diag_s1_s1"}}), 64);
  CHECK(df.bo_pair_set);
  CHECK(std::abs(df.b_sym.coeff(1)(0, 0) - 0.375) < 1e-8);
  CHECK(std::abs(df.b_sym.coeff(1)(0, 1)) < 1e-10);
}

TEST_CASE("residual flags a forced non-factorization") {
  // chi_1 has no canonical factorization; gluing arbitrary one-sided
  // factors must leave a visible residual.
  FourierSymbol chi1 = catalog("chi");
  CanonicalFactorization fake;
  fake.u_minus = FourierSymbol::constant_scalar(1.0);
  fake.u_plus = FourierSymbol::constant_scalar(1.0);
  fake.v_plus = FourierSymbol::constant_scalar(1.0);
  fake.v_minus = FourierSymbol::constant_scalar(1.0);
  ResidualReport rep = residual(chi1, fake);
  CHECK(rep.right > 0.5);
}

TEST_CASE("factorization bundle serialization") {
  CanonicalFactorization fact = scalar_canonical(catalog("S1"), 32);
  std::ostringstream out;
  write_factorization(fact, out);
  CHECK(out.str().find("szego-symbol") != std::string::npos);
  CHECK(out.str().find("residuals right=") != std::string::npos);
}
