#pragma once

#include <utility>

#include "szego/analytic_function.hpp"
#include "szego/contour.hpp"
#include "szego/szego_constants.hpp"

namespace szego {

/// G_f(a): circle average of trace f(a(e^{i theta})).
cplx Gf(const FourierSymbol& sym, const AnalyticFunction& f, int grid_log2 = 0,
        double pole_tol = 1e-8);

struct EfOptions {
  int section = 0;             // Hankel determinant section per node; 0: auto
  int band = 0;                // band of the per-node inverse; 0: auto
  int grid_log2 = 0;           // per-node inversion grid; 0: auto
  int max_node_doublings = 3;
  double phase_step_limit = kPi / 2.0;
  double invert_tol = 1e-10;
  bool validate_contour = true;
  int probe_order = 512;
  double contour_tol = 1e-3;
  /// Cross-check D(lambda) against 1/det(I-H(b)H(c~)) with a per-node
  /// factorization of a - lambda (scalar symbols).
  bool per_node_factorization = false;
};

struct EfResult {
  cplx value = 0.0;
  int nodes_used = 0;
  double net_phase = 0.0;      // must close to 0 over the loop
  double max_phase_step = 0.0;
  double cross_check_gap = 0.0;
};

/// E_f(a) = (1/2 pi i) \oint f d/dlambda log det T[a-l]T[(a-l)^{-1}] dl,
/// evaluated by parts as -(1/2 pi i) \oint f'(l) log D(l) dl with
/// D(l) = det(I - H(a-l) H(((a-l)^{-1})~)) and the log unwrapped along
/// the closed contour.
EfResult Ef(const FourierSymbol& sym, const AnalyticFunction& f,
            const Contour& contour, const EfOptions& opts = {});

/// trace f(T_n(a)): polynomial path by repeated multiplication.
cplx trace_f(const DenseOperator& op, const AnalyticFunction& f);
/// Rational (or cross-check) path: resolvent trapezoid quadrature over the
/// contour, one linear solve per node.
cplx trace_f(const DenseOperator& op, const AnalyticFunction& f,
             const Contour& contour, double pole_tol = 1e-6);

cplx trace_f_Tn(const FourierSymbol& sym, const AnalyticFunction& f, int n);
cplx trace_f_Tn(const FourierSymbol& sym, const AnalyticFunction& f, int n,
                const Contour& contour);

struct ErrorPoint {
  int n = 0;
  cplx trace = 0.0;
  cplx eps = 0.0;  // trace - (n+1) G_f - E_f
};

struct ErrorSequence {
  std::vector<ErrorPoint> points;
  cplx gf = 0.0;
  cplx ef = 0.0;
  /// sup over contour nodes of the factor tails R_n^+(b(l)), R_n^-(c(l));
  /// filled when per-node factorizations are enabled.
  std::vector<double> sup_tail_plus_b;
  std::vector<double> sup_tail_minus_c;
};

struct ErrorSequenceOptions {
  EfOptions ef;
  bool per_node_tails = false;
  int tail_band = 0;  // band for the per-node factorizations
};

ErrorSequence error_sequence(const FourierSymbol& sym, const AnalyticFunction& f,
                             const Contour& contour, const std::vector<int>& ns,
                             const KreinIndex& idx,
                             const ErrorSequenceOptions& opts = {});

struct RateFit {
  std::vector<int> ns;
  std::vector<double> errors;  // |eps_n|
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double target = 0.0;         // 1 - alpha - beta
  bool exact_regime = false;   // every point at the roundoff floor
  int used_points = 0;

  bool pass(double slack = 0.15) const {
    return exact_regime || slope <= target + slack;
  }
};

constexpr double kRateFloor = 1e-13;

/// Least squares on log|eps_n| vs log n inside the window; points below
/// the roundoff floor are excluded.
RateFit rate_fit(const ErrorSequence& seq, const KreinIndex& idx,
                 std::pair<int, int> window = {0, 1 << 30});

struct ContourValidation {
  double min_sigma = 0.0;          // min over nodes sigma_min(T_m(a) - l I);
                                   // T_m(a~) is the transpose, same values
  double min_range_distance = 0.0; // distance to the sampled eigenvalue cloud
  bool encloses_range = false;
  bool pass = false;
  double tau = 0.0;
};

/// Numerical stand-in for "the contour avoids and encloses the spectrum":
/// resolvent distances at a finite section plus the sampled range cloud.
ContourValidation contour_validate(const FourierSymbol& sym,
                                   const Contour& contour, int probe_order = 512,
                                   double tau = 1e-3, int grid_log2 = 0);

void write_trace_csv_header(std::ostream& out);
void append_trace_csv(std::ostream& out, const ErrorPoint& point, cplx gf,
                      cplx ef);
void write_rate_json(std::ostream& out, const RateFit& fit);

}  // namespace szego
