#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szego/bounds.hpp"
#include "szego/sections.hpp"
#include "szego/trace_asymptotics.hpp"

namespace py = pybind11;
using namespace szego;

namespace {

py::array_t<std::complex<double>> to_numpy(const DenseOperator& op) {
  py::array_t<std::complex<double>> out({op.rows(), op.cols()});
  auto buf = out.mutable_unchecked<2>();
  for (int i = 0; i < op.rows(); ++i)
    for (int j = 0; j < op.cols(); ++j) buf(i, j) = op(i, j);
  return out;
}

CatalogParams params_from_dict(const py::dict& d) {
  CatalogParams params;
  for (auto item : d)
    params[py::str(item.first)] = py::str(item.second);
  return params;
}

AnalyticFunction poly_from_list(const std::vector<cplx>& coeffs) {
  return AnalyticFunction::polynomial(coeffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Toeplitz sections, Wiener-Hopf factorization, and "
            "Szego constants";

  py::class_<KreinIndex>(m, "KreinIndex")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &KreinIndex::alpha)
      .def_readonly("beta", &KreinIndex::beta);

  py::class_<FourierSymbol>(m, "FourierSymbol")
      .def_property_readonly("dim", &FourierSymbol::dim)
      .def_property_readonly("band", &FourierSymbol::band)
      .def_property_readonly("label", &FourierSymbol::label)
      .def("coeff",
           [](const FourierSymbol& s, int k) { return to_numpy(s.coeff(k)); })
      .def("scalar_coeff", &FourierSymbol::scalar_coeff)
      .def("is_hermitian", &FourierSymbol::is_hermitian,
           py::arg("tol") = 1e-12)
      .def("__repr__", [](const FourierSymbol& s) {
        return "<FourierSymbol dim=" + std::to_string(s.dim()) + " band=" +
               std::to_string(s.band()) + " '" + s.label() + "'>";
      });

  m.def("catalog",
        [](const std::string& name, const py::dict& params) {
          return catalog(name, params_from_dict(params));
        },
        py::arg("name"), py::arg("params") = py::dict());
  m.def("multiply", &multiply, py::arg("a"), py::arg("b"), py::arg("band"));
  m.def("invert",
        [](const FourierSymbol& s, int band) { return invert(s, band); },
        py::arg("sym"), py::arg("band"));
  m.def("reflect", &reflect);
  m.def("krein_norm",
        [](const FourierSymbol& s, double alpha, double beta) {
          return krein_norm(s, KreinIndex(alpha, beta));
        },
        py::arg("sym"), py::arg("alpha"), py::arg("beta"));
  m.def("tail",
        [](const FourierSymbol& s, int n, const std::string& side, double alpha,
           double beta) {
          return tail(s, n, side == "minus" ? Side::Minus : Side::Plus,
                      KreinIndex(alpha, beta));
        },
        py::arg("sym"), py::arg("n"), py::arg("side"), py::arg("alpha"),
        py::arg("beta"));
  m.def("winding_number",
        [](const FourierSymbol& s) { return winding_number(s); });

  m.def("toeplitz_section",
        [](const FourierSymbol& s, int n) {
          return to_numpy(toeplitz_section(s, n));
        },
        py::arg("sym"), py::arg("n"));
  m.def("hankel_section",
        [](const FourierSymbol& s, int rows, int cols, bool reflected) {
          return to_numpy(hankel_section(s, rows, cols, reflected));
        },
        py::arg("sym"), py::arg("rows"), py::arg("cols"),
        py::arg("reflected") = false);
  m.def("toeplitz_determinant",
        [](const FourierSymbol& s, int n) {
          return determinant(toeplitz_section(s, n));
        },
        py::arg("sym"), py::arg("n"));
  m.def("singular_values", [](py::array_t<std::complex<double>> arr) {
    auto buf = arr.unchecked<2>();
    DenseOperator op(int(buf.shape(0)), int(buf.shape(1)));
    for (int i = 0; i < op.rows(); ++i)
      for (int j = 0; j < op.cols(); ++j) op(i, j) = buf(i, j);
    return singular_values(op);
  });

  m.def("g_of", [](const FourierSymbol& s) { return G_of(s); });
  m.def("e_of",
        [](const FourierSymbol& s, int band) {
          CanonicalFactorization fact = canonical_factorization(s, band);
          return E_of(s, fact).value;
        },
        py::arg("sym"), py::arg("band") = 256);
  m.def("bo_verify",
        [](const FourierSymbol& s, int n, int band) {
          CanonicalFactorization fact = canonical_factorization(
              s, band ? band : std::max(256, s.band()));
          BOReport rep = bo_verify(s, n, {}, &fact);
          py::dict out;
          out["n"] = rep.n;
          out["det_tn"] = rep.det_tn;
          out["g"] = rep.g;
          out["e"] = rep.e;
          out["det_correction"] = rep.det_correction;
          out["rel_error"] = rep.rel_error;
          return out;
        },
        py::arg("sym"), py::arg("n"), py::arg("band") = 0);
  m.def("scalar_factorization",
        [](const FourierSymbol& s, int band) {
          CanonicalFactorization fact = scalar_canonical(s, band);
          py::dict out;
          out["u_minus"] = fact.u_minus;
          out["u_plus"] = fact.u_plus;
          out["v_plus"] = fact.v_plus;
          out["v_minus"] = fact.v_minus;
          out["right_residual"] = fact.right_residual;
          out["left_residual"] = fact.left_residual;
          return out;
        },
        py::arg("sym"), py::arg("band") = 128);

  m.def("gf",
        [](const FourierSymbol& s, const std::vector<cplx>& coeffs) {
          return Gf(s, poly_from_list(coeffs));
        },
        py::arg("sym"), py::arg("poly_coeffs"));
  m.def("ef",
        [](const FourierSymbol& s, const std::vector<cplx>& coeffs,
           cplx center, double radius, int nodes, int probe_order) {
          EfOptions opts;
          opts.probe_order = probe_order;
          return Ef(s, poly_from_list(coeffs),
                    Contour::circle(center, radius, nodes), opts)
              .value;
        },
        py::arg("sym"), py::arg("poly_coeffs"), py::arg("center"),
        py::arg("radius"), py::arg("nodes") = 256, py::arg("probe_order") = 128);
  m.def("trace_f_tn",
        [](const FourierSymbol& s, const std::vector<cplx>& coeffs, int n) {
          return trace_f_Tn(s, poly_from_list(coeffs), n);
        },
        py::arg("sym"), py::arg("poly_coeffs"), py::arg("n"));
  m.def("error_sequence",
        [](const FourierSymbol& s, const std::vector<cplx>& coeffs,
           cplx center, double radius, int nodes, const std::vector<int>& ns,
           double alpha, double beta, int probe_order) {
          ErrorSequenceOptions opts;
          opts.ef.probe_order = probe_order;
          ErrorSequence seq =
              error_sequence(s, poly_from_list(coeffs),
                             Contour::circle(center, radius, nodes), ns,
                             KreinIndex(alpha, beta), opts);
          py::list out;
          for (const auto& p : seq.points) {
            py::dict row;
            row["n"] = p.n;
            row["trace"] = p.trace;
            row["eps"] = p.eps;
            out.append(row);
          }
          py::dict result;
          result["gf"] = seq.gf;
          result["ef"] = seq.ef;
          result["points"] = out;
          return result;
        },
        py::arg("sym"), py::arg("poly_coeffs"), py::arg("center"),
        py::arg("radius"), py::arg("nodes"), py::arg("ns"), py::arg("alpha"),
        py::arg("beta"), py::arg("probe_order") = 128);
  m.def("rate_fit",
        [](const std::vector<int>& ns, const std::vector<double>& errors,
           double alpha, double beta) {
          ErrorSequence seq;
          for (std::size_t i = 0; i < ns.size(); ++i) {
            ErrorPoint p;
            p.n = ns[i];
            p.eps = errors[i];
            seq.points.push_back(p);
          }
          RateFit fit = rate_fit(seq, KreinIndex(alpha, beta));
          py::dict out;
          out["slope"] = fit.slope;
          out["intercept"] = fit.intercept;
          out["r_squared"] = fit.r_squared;
          out["target"] = fit.target;
          out["exact_regime"] = fit.exact_regime;
          out["pass"] = fit.pass();
          return out;
        },
        py::arg("ns"), py::arg("errors"), py::arg("alpha"), py::arg("beta"));

  m.def("constant_m", &constant_M, py::arg("smoothness"), py::arg("gamma"));

  py::register_exception<NumericalError>(m, "NumericalError");
}
