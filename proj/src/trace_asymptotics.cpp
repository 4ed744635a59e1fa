#include "szego/trace_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "szego/linalg.hpp"
#include "szego/parallel.hpp"
#include "szego/sections.hpp"

namespace szego {

cplx Gf(const FourierSymbol& sym, const AnalyticFunction& f, int grid_log2,
        double pole_tol) {
  const int m = grid_log2 ? grid_log2 : default_grid_log2(sym, 12);
  GridSamples grid = evaluate_on_grid(sym, m);
  cplx sum = 0.0;
  if (sym.dim() == 1) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const cplx v = grid.scalar(j);
      for (const auto& term : f.poles())
        if (std::abs(v - term.pole) <= pole_tol)
          throw NumericalError("Gf: pole " + fmt17(term.pole) +
                               " hits the sampled range at theta=" +
                               fmt17(2.0 * kPi * double(j) / double(grid.size())));
      sum += f.eval(v);
    }
  } else {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      DenseOperator block = grid.block_matrix(j);
      for (const auto& term : f.poles()) {
        DenseOperator shifted = block;
        for (int d = 0; d < sym.dim(); ++d) shifted(d, d) -= term.pole;
        const auto sv = singular_values(shifted);
        if (sv.back() <= pole_tol)
          throw NumericalError("Gf: pole " + fmt17(term.pole) +
                               " hits the sampled range");
      }
      sum += f.eval_matrix(block).trace();
    }
  }
  return sum / double(grid.size());
}

// ---------------------------------------------------------------------------

cplx trace_f(const DenseOperator& op, const AnalyticFunction& f) {
  if (!op.square()) throw NumericalError("trace_f: matrix not square");
  if (f.kind() == AnalyticFunction::Kind::Rational)
    throw NumericalError("trace_f: rational f needs a contour");
  const auto& coeffs = f.poly_coeffs();
  cplx total = coeffs.empty() ? cplx(0.0, 0.0)
                              : coeffs[0] * double(op.rows());
  if (coeffs.size() < 2) return total;
  DenseOperator power = op;
  total += coeffs[1] * power.trace();
  for (std::size_t k = 2; k < coeffs.size(); ++k) {
    power = matmul(power, op);
    if (coeffs[k] != cplx(0.0, 0.0)) total += coeffs[k] * power.trace();
  }
  return total;
}

cplx trace_f(const DenseOperator& op, const AnalyticFunction& f,
             const Contour& contour, double pole_tol) {
  if (!op.square()) throw NumericalError("trace_f: matrix not square");
  for (const auto& term : f.poles()) {
    DenseOperator shifted = op;
    for (int d = 0; d < op.rows(); ++d) shifted(d, d) -= term.pole;
    const double sigma = smallest_singular_value(shifted);
    if (sigma <= pole_tol)
      throw NumericalError("trace_f: pole " + fmt17(term.pole) +
                           " at resolvent distance " + fmt17(sigma) +
                           " from the section spectrum");
  }
  const int n = op.rows();
  const auto& nodes = contour.nodes();
  const auto& weights = contour.weights();
  std::vector<cplx> contrib(nodes.size());
  parallel_for(0, nodes.size(), [&](std::size_t j) {
    DenseOperator shifted(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        shifted(r, c) = (r == c ? nodes[j] : cplx(0.0, 0.0)) - op(r, c);
    LuFactorization lu(shifted);
    if (lu.singular())
      throw NumericalError("trace_f: contour node hits the spectrum");
    DenseOperator inv = lu.inverse();
    contrib[j] = f.eval(nodes[j]) * inv.trace() * weights[j];
  });
  cplx total = 0.0;
  for (const auto& v : contrib) total += v;
  return total / cplx(0.0, 2.0 * kPi);
}

cplx trace_f_Tn(const FourierSymbol& sym, const AnalyticFunction& f, int n) {
  return trace_f(toeplitz_section(sym, n), f);
}

cplx trace_f_Tn(const FourierSymbol& sym, const AnalyticFunction& f, int n,
                const Contour& contour) {
  return trace_f(toeplitz_section(sym, n), f, contour);
}

// ---------------------------------------------------------------------------

namespace {

struct NodeDet {
  cplx log_d;      // log|D| + i * principal arg (unwrapped later)
  bool failed = false;
  std::string message;
};

/// D(lambda) = det(I - H(a - l) H(((a - l)^{-1})~)) at one contour node,
/// via the finite Hankel section with exact diagonal continuation.
cplx node_det(const FourierSymbol& shifted, int band, int grid_log2,
              int section, double invert_tol) {
  // Winding/invertibility of det(a - lambda) on the grid.
  {
    GridSamples g = evaluate_on_grid(shifted, grid_log2);
    std::vector<cplx> dets;
    if (shifted.dim() == 1) {
      dets = g.values;
    } else {
      dets.resize(g.size());
      for (std::size_t j = 0; j < g.size(); ++j)
        dets[j] = determinant(g.block_matrix(j));
    }
    for (std::size_t j = 0; j < dets.size(); ++j)
      if (std::abs(dets[j]) <= invert_tol)
        throw NumericalError("Ef: contour node touches the symbol range");
    const int w = winding_number_of_samples(dets);
    if (w != 0)
      throw NumericalError("Ef: det(a - lambda) has winding " +
                           std::to_string(w) + " at a contour node");
  }
  InvertOptions iopts;
  iopts.singular_tol = invert_tol;
  iopts.grid_log2 = grid_log2;
  FourierSymbol inv = invert(shifted, band, iopts);

  const int extent = std::min(hankel_product_row_extent(shifted),
                              hankel_product_col_extent(inv));
  if (extent == 0) return 1.0;
  const int M = std::min(extent, section);
  HankelProductBlock blk = hankel_product_block(shifted, inv, 0, M, 0, M);
  DenseOperator sec = DenseOperator::identity(M * shifted.dim());
  sec -= blk.op;
  LogDet ld = log_determinant(sec);
  cplx tail = 0.0;
  if (M < extent) {
    auto diag = hankel_product_diag_trace(shifted, inv, M, extent);
    for (const auto& t : diag) tail -= t;
  }
  return std::exp(cplx(ld.log_abs, 0.0) + tail) *
         cplx(std::cos(ld.arg), std::sin(ld.arg));
}

}  // namespace

EfResult Ef(const FourierSymbol& sym, const AnalyticFunction& f,
            const Contour& contour, const EfOptions& opts) {
  if (opts.validate_contour) {
    ContourValidation val = contour_validate(sym, contour, opts.probe_order,
                                             opts.contour_tol, opts.grid_log2);
    if (!val.pass)
      throw NumericalError(
          "Ef: contour validation failed (min sigma " + fmt17(val.min_sigma) +
          ", range distance " + fmt17(val.min_range_distance) +
          (val.encloses_range ? ")" : ", range not enclosed)"));
  }
  const int band = opts.band ? opts.band : std::max(256, sym.band());
  int grid_log2 = opts.grid_log2 ? opts.grid_log2 : default_grid_log2(sym, 14);
  while ((std::size_t(1) << grid_log2) <= 2 * std::size_t(band)) ++grid_log2;
  const int section = opts.section ? opts.section : std::min(384, std::max(64, band));

  Contour work = contour;
  for (int attempt = 0;; ++attempt) {
    const auto& nodes = work.nodes();
    std::vector<cplx> dets(nodes.size());
    std::vector<std::string> errors(nodes.size());
    parallel_for(0, nodes.size(), [&](std::size_t j) {
      try {
        dets[j] = node_det(shift(sym, nodes[j]), band, grid_log2, section,
                           opts.invert_tol);
      } catch (const NumericalError& e) {
        errors[j] = e.what();
      }
    });
    for (const auto& msg : errors)
      if (!msg.empty()) throw NumericalError(msg);

    PhaseTrack track = track_phase(dets);
    if (track.max_step > opts.phase_step_limit) {
      if (attempt >= opts.max_node_doublings)
        throw NumericalError("Ef: log D phase step " + fmt17(track.max_step) +
                             " above the limit after node doubling");
      work = work.refined();
      continue;
    }
    if (std::abs(track.net) > 1e-6)
      throw NumericalError("Ef: log D does not close around the contour "
                           "(net phase " + fmt17(track.net) +
                           "); the contour crosses the spectrum");

    EfResult result;
    result.nodes_used = work.node_count();
    result.net_phase = track.net;
    result.max_phase_step = track.max_step;
    cplx sum = 0.0;
    const auto& weights = work.weights();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const cplx log_d(std::log(std::abs(dets[j])), track.phase[j]);
      sum += f.eval_derivative(nodes[j]) * log_d * weights[j];
    }
    result.value = -sum / cplx(0.0, 2.0 * kPi);

    if (opts.per_node_factorization && sym.dim() == 1) {
      double worst = 0.0;
      std::vector<double> gaps(nodes.size());
      parallel_for(0, nodes.size(), [&](std::size_t j) {
        FourierSymbol shifted = shift(sym, nodes[j]);
        CanonicalFactorization fact = canonical_factorization(shifted, band);
        EOptions eopts;
        EResult er = E_of(shifted, fact, section, eopts);
        gaps[j] = std::abs(er.value - dets[j]) /
                  std::max(1e-300, std::abs(dets[j]));
      });
      for (double g : gaps) worst = std::max(worst, g);
      result.cross_check_gap = worst;
    }
    return result;
  }
}

// ---------------------------------------------------------------------------

ErrorSequence error_sequence(const FourierSymbol& sym, const AnalyticFunction& f,
                             const Contour& contour, const std::vector<int>& ns,
                             const KreinIndex& idx,
                             const ErrorSequenceOptions& opts) {
  (void)idx;  // the index enters through rate_fit's target
  ErrorSequence seq;
  seq.gf = Gf(sym, f, opts.ef.grid_log2);
  seq.ef = Ef(sym, f, contour, opts.ef).value;
  seq.points.resize(ns.size());
  parallel_for(0, ns.size(), [&](std::size_t i) {
    const int n = ns[i];
    ErrorPoint p;
    p.n = n;
    p.trace = f.kind() == AnalyticFunction::Kind::Polynomial
                  ? trace_f_Tn(sym, f, n)
                  : trace_f_Tn(sym, f, n, contour);
    p.eps = p.trace - double(n + 1) * seq.gf - seq.ef;
    seq.points[i] = p;
  });
  if (opts.per_node_tails && sym.dim() == 1) {
    const int band = opts.tail_band ? opts.tail_band : std::max(256, sym.band());
    const auto& nodes = contour.nodes();
    std::vector<std::vector<double>> plus_tails(nodes.size());
    std::vector<std::vector<double>> minus_tails(nodes.size());
    parallel_for(0, nodes.size(), [&](std::size_t j) {
      CanonicalFactorization fact =
          canonical_factorization(shift(sym, nodes[j]), band);
      plus_tails[j].resize(ns.size());
      minus_tails[j].resize(ns.size());
      for (std::size_t i = 0; i < ns.size(); ++i) {
        plus_tails[j][i] = tail(fact.b_sym, ns[i], Side::Plus, idx);
        minus_tails[j][i] = tail(fact.c_sym, ns[i], Side::Minus, idx);
      }
    });
    seq.sup_tail_plus_b.assign(ns.size(), 0.0);
    seq.sup_tail_minus_c.assign(ns.size(), 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j)
      for (std::size_t i = 0; i < ns.size(); ++i) {
        seq.sup_tail_plus_b[i] = std::max(seq.sup_tail_plus_b[i], plus_tails[j][i]);
        seq.sup_tail_minus_c[i] = std::max(seq.sup_tail_minus_c[i], minus_tails[j][i]);
      }
  }
  return seq;
}

RateFit rate_fit(const ErrorSequence& seq, const KreinIndex& idx,
                 std::pair<int, int> window) {
  RateFit fit;
  fit.target = 1.0 - idx.alpha - idx.beta;
  std::vector<double> xs, ys;
  for (const auto& p : seq.points) {
    if (p.n < window.first || p.n > window.second) continue;
    const double err = std::abs(p.eps);
    fit.ns.push_back(p.n);
    fit.errors.push_back(err);
    // eps_n is a difference of trace-sized quantities, so the roundoff
    // floor scales with the trace magnitude.
    const double floor = kRateFloor * std::max(1.0, std::abs(p.trace));
    if (err >= floor && p.n >= 1) {
      xs.push_back(std::log(double(p.n)));
      ys.push_back(std::log(err));
    }
  }
  fit.used_points = int(xs.size());
  if (xs.empty()) {
    fit.exact_regime = true;  // formula exact at this scale
    return fit;
  }
  if (xs.size() < 4)
    throw NumericalError("rate_fit: fewer than 4 usable points above the "
                         "roundoff floor");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double n = double(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

// ---------------------------------------------------------------------------

ContourValidation contour_validate(const FourierSymbol& sym,
                                   const Contour& contour, int probe_order,
                                   double tau, int grid_log2) {
  ContourValidation report;
  report.tau = tau;
  const int m = grid_log2 ? grid_log2 : default_grid_log2(sym, 12);
  GridSamples grid = evaluate_on_grid(sym, m);

  // Sampled eigenvalue cloud of the range (closed forms for N <= 2; the
  // resolvent probe below covers the rest).
  std::vector<cplx> cloud;
  const int N = sym.dim();
  if (N == 1) {
    cloud = grid.values;
  } else if (N == 2) {
    cloud.reserve(2 * grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const cplx* b = grid.block(j);
      const cplx tr = b[0] + b[3];
      const cplx det = b[0] * b[3] - b[1] * b[2];
      const cplx disc = std::sqrt(tr * tr - 4.0 * det);
      cloud.push_back(0.5 * (tr + disc));
      cloud.push_back(0.5 * (tr - disc));
    }
  } else {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const cplx* b = grid.block(j);
      for (int d = 0; d < N; ++d) cloud.push_back(b[std::size_t(d) * N + d]);
    }
  }

  report.encloses_range = true;
  for (const auto& z : cloud)
    if (!contour.contains(z)) {
      report.encloses_range = false;
      break;
    }

  double min_dist = std::numeric_limits<double>::infinity();
  for (const auto& node : contour.nodes())
    for (const auto& z : cloud)
      min_dist = std::min(min_dist, std::abs(node - z));
  report.min_range_distance = min_dist;

  // sigma_min(T_m(a) - lambda I) per node; T_m(a~) is the plain transpose
  // and shares every singular value, so one probe covers both.
  DenseOperator tm = toeplitz_section(sym, probe_order);
  const auto& nodes = contour.nodes();
  std::vector<double> sigmas(nodes.size());
  parallel_for(0, nodes.size(), [&](std::size_t j) {
    DenseOperator shifted = tm;
    for (int d = 0; d < tm.rows(); ++d) shifted(d, d) -= nodes[j];
    sigmas[j] = smallest_singular_value(shifted, 30);
  });
  report.min_sigma = *std::min_element(sigmas.begin(), sigmas.end());
  report.pass = report.encloses_range && report.min_sigma > tau &&
                report.min_range_distance > tau;
  return report;
}

// ---------------------------------------------------------------------------

void write_trace_csv_header(std::ostream& out) {
  out << "n,trace_re,trace_im,linear_re,linear_im,ef_re,ef_im,eps_re,eps_im,"
         "abs_eps\n";
}

void append_trace_csv(std::ostream& out, const ErrorPoint& point, cplx gf,
                      cplx ef) {
  const cplx linear = double(point.n + 1) * gf;
  out << point.n << ',' << fmt17(point.trace.real()) << ','
      << fmt17(point.trace.imag()) << ',' << fmt17(linear.real()) << ','
      << fmt17(linear.imag()) << ',' << fmt17(ef.real()) << ','
      << fmt17(ef.imag()) << ',' << fmt17(point.eps.real()) << ','
      << fmt17(point.eps.imag()) << ',' << fmt17(std::abs(point.eps)) << '\n';
}

void write_rate_json(std::ostream& out, const RateFit& fit) {
  out << "{\n  \"ns\": [";
  for (std::size_t i = 0; i < fit.ns.size(); ++i)
    out << (i ? ", " : "") << fit.ns[i];
  out << "],\n  \"errors\": [";
  for (std::size_t i = 0; i < fit.errors.size(); ++i)
    out << (i ? ", " : "") << fmt17(fit.errors[i]);
  out << "],\n  \"slope\": " << fmt17(fit.slope)
      << ",\n  \"intercept\": " << fmt17(fit.intercept)
      << ",\n  \"r_squared\": " << fmt17(fit.r_squared)
      << ",\n  \"target\": " << fmt17(fit.target)
      << ",\n  \"exact_regime\": " << (fit.exact_regime ? "true" : "false")
      << ",\n  \"used_points\": " << fit.used_points << "\n}\n";
}

}  // namespace szego
