#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "szego/bounds.hpp"
#include "szego/fft.hpp"
#include "szego/linalg.hpp"
#include "szego/rng.hpp"

using namespace szego;

namespace {

// Eigenvalues of a 3x3 Hermitian matrix through the characteristic cubic
// (trigonometric form); oracle independent of the Jacobi iteration.
std::vector<double> hermitian_eigs_3x3(const DenseOperator& h) {
  const double q = (h(0, 0).real() + h(1, 1).real() + h(2, 2).real()) / 3.0;
  DenseOperator b = h;
  for (int i = 0; i < 3; ++i) b(i, i) -= q;
  double p2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p2 += std::norm(b(i, j));
  const double p = std::sqrt(p2 / 6.0);
  std::vector<double> eigs(3, q);
  if (p < 1e-300) return eigs;
  DenseOperator bb = b;
  bb *= cplx(1.0 / p, 0.0);
  const cplx det = determinant(bb);
  double rr = std::clamp(det.real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(rr) / 3.0;
  eigs[0] = q + 2.0 * p * std::cos(phi);
  eigs[2] = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
  eigs[1] = 3.0 * q - eigs[0] - eigs[2];
  std::sort(eigs.begin(), eigs.end(), std::greater<double>());
  return eigs;
}

}  // namespace

TEST_CASE("fft inverts and matches the direct transform") {
  Rng rng(11);
  std::vector<cplx> x(64);
  for (auto& v : x) v = rng.next_cplx();
  std::vector<cplx> y = x;
  fft(y);
  // Direct O(n^2) check of a few bins.
  for (int k : {0, 1, 7, 33}) {
    cplx direct = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
      direct += x[j] * std::polar(1.0, -2.0 * kPi * double(j * k) / 64.0);
    CHECK(std::abs(y[std::size_t(k)] - direct) < 1e-11);
  }
  std::vector<cplx> z = y;
  ifft_unnormalized(z);
  for (std::size_t j = 0; j < x.size(); ++j)
    CHECK(std::abs(z[j] / 64.0 - x[j]) < 1e-12);
}

TEST_CASE("LU determinant on known matrices") {
  CHECK(std::abs(determinant(DenseOperator::identity(3)) - 1.0) < 1e-14);
  DenseOperator a(2, 2);
  a(0, 0) = 1.25;
  a(0, 1) = -0.5;
  a(1, 0) = -0.5;
  a(1, 1) = 1.25;
  CHECK(std::abs(determinant(a) - 1.3125) < 1e-14);
  // Singular matrix reports zero.
  DenseOperator s(2, 2);
  s(0, 0) = 1.0;
  s(0, 1) = 2.0;
  s(1, 0) = 2.0;
  s(1, 1) = 4.0;
  CHECK(std::abs(determinant(s)) < 1e-14);
}

TEST_CASE("log determinant agrees with the plain determinant") {
  Rng rng(21);
  DenseOperator a = random_matrix(rng, 5, 5);
  const cplx d = determinant(a);
  const LogDet ld = log_determinant(a);
  CHECK(std::abs(ld.value() - d) < 1e-12 * std::abs(d));
}

TEST_CASE("LU solve and adjoint solve") {
  Rng rng(31);
  DenseOperator a = random_matrix(rng, 6, 6);
  for (int i = 0; i < 6; ++i) a(i, i) += 4.0;  // keep it comfortably regular
  LuFactorization lu(a);
  std::vector<cplx> b(6);
  for (auto& v : b) v = rng.next_cplx();
  std::vector<cplx> x = b;
  lu.solve(x);
  for (int i = 0; i < 6; ++i) {
    cplx r = -b[std::size_t(i)];
    for (int j = 0; j < 6; ++j) r += a(i, j) * x[std::size_t(j)];
    CHECK(std::abs(r) < 1e-12);
  }
  std::vector<cplx> y = b;
  lu.solve_adjoint(y);
  for (int i = 0; i < 6; ++i) {
    cplx r = -b[std::size_t(i)];
    for (int j = 0; j < 6; ++j) r += std::conj(a(j, i)) * y[std::size_t(j)];
    CHECK(std::abs(r) < 1e-12);
  }
}

TEST_CASE("schatten norms of the identity") {
  SchattenReport rep = schatten_norm(DenseOperator::identity(4));
  CHECK(rep.trace_norm == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep.hilbert_schmidt_norm == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.operator_norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("jacobi singular values match the characteristic-poly oracle") {
  Rng rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    DenseOperator a = random_matrix(rng, 3, 3);
    // Oracle: singular values are sqrt of eigenvalues of A* A.
    DenseOperator ata = matmul(a.adjoint(), a);
    auto eigs = hermitian_eigs_3x3(ata);
    auto sv = singular_values(a);
    REQUIRE(sv.size() == 3);
    for (int i = 0; i < 3; ++i)
      CHECK(sv[std::size_t(i)] ==
            doctest::Approx(std::sqrt(std::max(0.0, eigs[std::size_t(i)])))
                .epsilon(1e-8));
  }
}

TEST_CASE("singular value invariants hold on random rectangles") {
  Rng rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 2 + int(rng.next_u64() % 7);
    const int n = 2 + int(rng.next_u64() % 7);
    DenseOperator a = random_matrix(rng, m, n);
    SchattenReport rep = schatten_norm(a);
    CHECK(rep.operator_norm <= rep.hilbert_schmidt_norm + 1e-10);
    CHECK(rep.hilbert_schmidt_norm <= rep.trace_norm + 1e-10);
    CHECK(std::is_sorted(rep.values.begin(), rep.values.end(),
                         std::greater<double>()));
    // Hilbert-Schmidt norm equals the Frobenius norm.
    double frob = 0.0;
    for (const auto& z : a.data()) frob += std::norm(z);
    CHECK(rep.hilbert_schmidt_norm == doctest::Approx(std::sqrt(frob)).epsilon(1e-10));
  }
}

TEST_CASE("smallest singular value via inverse iteration") {
  Rng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    DenseOperator a = random_matrix(rng, 5, 5);
    for (int i = 0; i < 5; ++i) a(i, i) += 3.0;
    const double sigma = smallest_singular_value(a);
    const auto sv = singular_values(a);
    CHECK(sigma == doctest::Approx(sv.back()).epsilon(1e-8));
  }
}

TEST_CASE("det(I-AB) = det(I-BA) for random conformable pairs") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + int(rng.next_u64() % 5);
    const int k = 2 + int(rng.next_u64() % 5);
    DenseOperator a = random_matrix(rng, m, k);
    DenseOperator b = random_matrix(rng, k, m);
    DenseOperator iab = DenseOperator::identity(m);
    iab -= matmul(a, b);
    DenseOperator iba = DenseOperator::identity(k);
    iba -= matmul(b, a);
    const cplx d1 = determinant(iab);
    const cplx d2 = determinant(iba);
    CHECK(std::abs(d1 - d2) <= 1e-9 * std::max(1.0, std::abs(d1)));
  }
}
