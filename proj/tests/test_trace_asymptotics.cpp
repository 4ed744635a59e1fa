#include <doctest.h>

#include <cmath>

#include "szego/trace_asymptotics.hpp"

using namespace szego;

namespace {

const AnalyticFunction kZ = AnalyticFunction::polynomial({0.0, 1.0}, "z");
const AnalyticFunction kZ2 = AnalyticFunction::polynomial({0.0, 0.0, 1.0}, "z^2");

}  // namespace

TEST_CASE("Gf: means of polynomials of the symbol") {
  CHECK(std::abs(Gf(catalog("S3"), kZ) - 3.0) < 1e-12);
  CHECK(std::abs(Gf(catalog("S3"), kZ2) - 11.0) < 1e-10);
  FourierSymbol diag = catalog("S5", {{"variant", "diag_const"},
                                      {"c1", "2"}, {"c2", "3"}});
  CHECK(std::abs(Gf(diag, kZ) - 5.0) < 1e-12);
}

TEST_CASE("Gf rejects poles on the sampled range") {
  AnalyticFunction f = AnalyticFunction::rational({}, {{cplx(3.0, 0.0), 1, 1.0}});
  CHECK_THROWS_WITH_AS(Gf(catalog("S3"), f), doctest::Contains("pole"),
                       NumericalError);
  // A pole away from the range is fine.
  AnalyticFunction ok = AnalyticFunction::rational({}, {{cplx(9.0, 0.0), 1, 1.0}});
  const cplx got = Gf(catalog("S2"), ok);  // constant 2: f(2) = 1/(2-9)
  CHECK(std::abs(got - 1.0 / (2.0 - 9.0)) < 1e-12);
}

TEST_CASE("trace_f_Tn basics") {
  CHECK(std::abs(trace_f_Tn(catalog("S3"), kZ, 4) - 15.0) < 1e-12);
  CHECK(std::abs(trace_f_Tn(catalog("S3"), kZ2, 4) - 53.0) < 1e-10);
  CHECK(std::abs(trace_f_Tn(catalog("S2"), kZ2, 3) - 16.0) < 1e-12);
}

TEST_CASE("Ef for S3 and f=z^2 equals -2 via the contour") {
  Contour circle = Contour::circle(3.0, 2.5, 256);
  EfOptions opts;
  opts.probe_order = 128;  // cheap probe for the unit test
  EfResult ef = Ef(catalog("S3"), kZ2, circle, opts);
  CHECK(std::abs(ef.value - (-2.0)) < 1e-6);
  CHECK(std::abs(ef.net_phase) < 1e-8);
}

TEST_CASE("Ef vanishes for constants") {
  Contour circle = Contour::circle(2.0, 1.0, 64);
  EfOptions opts;
  opts.probe_order = 32;
  EfResult ef = Ef(catalog("S2"), kZ, circle, opts);
  CHECK(std::abs(ef.value) < 1e-12);
}

TEST_CASE("Ef is contour independent and quadrature converged") {
  EfOptions opts;
  opts.probe_order = 128;
  EfResult circle = Ef(catalog("S3"), kZ2, Contour::circle(3.0, 2.5, 256), opts);
  EfResult ellipse =
      Ef(catalog("S3"), kZ2, Contour::ellipse(3.0, 2.6, 2.2, 256), opts);
  CHECK(std::abs(circle.value - ellipse.value) <=
        1e-6 * std::abs(circle.value));
  EfResult doubled = Ef(catalog("S3"), kZ2, Contour::circle(3.0, 2.5, 512), opts);
  CHECK(std::abs(circle.value - doubled.value) < 1e-8);
}

TEST_CASE("Ef matches the error-sequence limit for S1") {
  // eps_n -> 0 forces E_f = lim trace f(T_n) - (n+1) G_f; compare at n=256.
  FourierSymbol s1 = catalog("S1");
  EfOptions opts;
  opts.probe_order = 128;
  Contour circle = Contour::circle(1.25, 1.1, 256);
  EfResult ef = Ef(s1, kZ2, circle, opts);
  const cplx gf = Gf(s1, kZ2);
  const cplx limit = trace_f_Tn(s1, kZ2, 256) - 257.0 * gf;
  CHECK(std::abs(ef.value - limit) < 1e-9);
}

TEST_CASE("Ef cross-check against per-node factorizations") {
  EfOptions opts;
  opts.probe_order = 64;
  opts.per_node_factorization = true;
  Contour circle = Contour::circle(3.0, 2.5, 64);
  EfResult ef = Ef(catalog("S3"), kZ2, circle, opts);
  CHECK(ef.cross_check_gap < 1e-8);
}

TEST_CASE("error_sequence: band symbols sit in the exact regime") {
  EfOptions efopts;
  efopts.probe_order = 128;
  ErrorSequenceOptions opts;
  opts.ef = efopts;
  const KreinIndex idx(0.75, 0.75);
  ErrorSequence seq = error_sequence(catalog("S3"), kZ2,
                                     Contour::circle(3.0, 2.5, 256),
                                     {1, 2, 3, 4, 5, 6, 7, 8}, idx, opts);
  for (const auto& p : seq.points) CHECK(std::abs(p.eps) < 1e-10);
  RateFit fit = rate_fit(seq, idx);
  CHECK(fit.exact_regime);
  CHECK(fit.pass());

  // Constant symbols are exact for every n.
  EfOptions copts;
  copts.probe_order = 32;
  ErrorSequenceOptions c2opts;
  c2opts.ef = copts;
  ErrorSequence cseq = error_sequence(catalog("S2"), kZ2,
                                      Contour::circle(2.0, 1.0, 64),
                                      {1, 2, 4, 8}, idx, c2opts);
  for (const auto& p : cseq.points) CHECK(std::abs(p.eps) < 1e-12);
}

TEST_CASE("error_sequence attaches uniform factor tails on request") {
  EfOptions efopts;
  efopts.probe_order = 64;
  ErrorSequenceOptions opts;
  opts.ef = efopts;
  opts.per_node_tails = true;
  const KreinIndex idx(0.75, 0.75);
  ErrorSequence seq = error_sequence(catalog("S1"), kZ2,
                                     Contour::circle(1.25, 1.1, 64),
                                     {1, 2, 4, 8}, idx, opts);
  REQUIRE(seq.sup_tail_plus_b.size() == 4);
  for (std::size_t i = 1; i < seq.sup_tail_plus_b.size(); ++i) {
    CHECK(seq.sup_tail_plus_b[i] <= seq.sup_tail_plus_b[i - 1] + 1e-15);
    CHECK(seq.sup_tail_minus_c[i] <= seq.sup_tail_minus_c[i - 1] + 1e-15);
  }
  CHECK(seq.sup_tail_plus_b.front() > 0.0);
}

TEST_CASE("translation consistency for f = z") {
  FourierSymbol s3 = catalog("S3");
  const cplx lambda0(7.5, 0.0);
  for (int n : {2, 5, 9}) {
    const cplx lhs = trace_f_Tn(s3, kZ, n) - double(n + 1) * lambda0;
    const cplx rhs = trace_f_Tn(shift(s3, lambda0), kZ, n);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("rate_fit on synthetic sequences") {
  const KreinIndex idx(0.75, 0.75);
  ErrorSequence seq;
  for (int n : {16, 32, 64, 128, 256}) {
    ErrorPoint p;
    p.n = n;
    p.eps = std::pow(double(n), -0.5);
    seq.points.push_back(p);
  }
  RateFit fit = rate_fit(seq, idx);
  CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(fit.target == doctest::Approx(-0.5));
  CHECK(fit.pass());

  // A full period of the log-wobble keeps the multiplicative factor from
  // tilting the fit.
  ErrorSequence wobble;
  for (int n = 1; n <= 512; n *= 2) {
    ErrorPoint p;
    p.n = n;
    p.eps = std::pow(double(n), -0.5) * (2.0 + std::cos(std::log(double(n))));
    wobble.points.push_back(p);
  }
  RateFit wf = rate_fit(wobble, idx);
  CHECK(wf.slope > -0.6);
  CHECK(wf.slope < -0.4);

  ErrorSequence zeros;
  for (int n : {1, 2, 4, 8}) {
    ErrorPoint p;
    p.n = n;
    p.eps = 0.0;
    zeros.points.push_back(p);
  }
  RateFit zf = rate_fit(zeros, idx);
  CHECK(zf.exact_regime);

  ErrorSequence sparse;
  for (int n : {16, 32}) {
    ErrorPoint p;
    p.n = n;
    p.eps = std::pow(double(n), -0.5);
    sparse.points.push_back(p);
  }
  CHECK_THROWS_AS(rate_fit(sparse, idx), NumericalError);
}

TEST_CASE("contour_validate basics") {
  // Constant 2, circle center 2 radius 1: range distance exactly 1.
  ContourValidation v2 =
      contour_validate(catalog("S2"), Contour::circle(2.0, 1.0, 64), 32);
  CHECK(v2.min_range_distance == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(v2.encloses_range);
  CHECK(v2.pass);

  // S3 range [1, 5] inside circle(3, 2.5): node distance 0.5.
  ContourValidation v3 =
      contour_validate(catalog("S3"), Contour::circle(3.0, 2.5, 128), 64);
  CHECK(v3.min_range_distance == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(v3.pass);

  // S1 with the probe order of the examples.
  ContourValidation v1 =
      contour_validate(catalog("S1"), Contour::circle(1.25, 1.1, 64), 512);
  CHECK(v1.pass);
  CHECK(v1.min_sigma > 1e-3);

  // A contour that clips the range must fail.
  ContourValidation bad =
      contour_validate(catalog("S3"), Contour::circle(3.0, 1.0, 64), 32);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("band-exactness: eps_n = 0 beyond K*d for Laurent polynomials") {
  EfOptions efopts;
  efopts.probe_order = 64;
  const KreinIndex idx(0.75, 0.75);
  // S1 has band 1 and f = z^2 has degree 2: exact from n >= 2.
  ErrorSequenceOptions opts;
  opts.ef = efopts;
  ErrorSequence seq = error_sequence(catalog("S1"), kZ2,
                                     Contour::circle(1.25, 1.1, 256),
                                     {2, 3, 4, 8, 16}, idx, opts);
  for (const auto& p : seq.points) CHECK(std::abs(p.eps) < 1e-10);
}
