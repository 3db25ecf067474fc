// Python bindings: point evaluation, the diagonal and its poles, the oracle
// and the self test.

#include <cstdio>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tornheim/app.hpp"
#include "tornheim/oracle.hpp"
#include "tornheim/tornheim.hpp"

namespace py = pybind11;
using namespace tornheim;

namespace {

EvalConfig make_cfg(double tol, int max_order, double proximity) {
  EvalConfig cfg;
  cfg.tol = tol;
  cfg.max_order = max_order;
  cfg.singular_proximity = proximity;
  return cfg;
}

SeriesValue py_eval(const std::string& fn, Complex s, Complex t, Complex u, double tol, int max_order,
                    double proximity, const std::string& method) {
  const FunctionId f = function_from_string(fn);
  const TriplePoint p{s, t, u};
  const EvalConfig cfg = make_cfg(tol, max_order, proximity);
  py::gil_scoped_release release;
  if (f == FunctionId::T) return eval_T(p, cfg, recombination_from_string(method));
  if (method == "legacy") {
    if (f == FunctionId::S1) return eval_S1_legacy(p, cfg);
    if (f == FunctionId::S2) return eval_S2_legacy(p, cfg);
    throw DomainError("method 'legacy' exists for S1 and S2 only");
  }
  if (method != "auto" && method != "new") throw DomainError("unknown method '" + method + "' for " + fn);
  return eval_S(f, p, cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tornheim double zeta T(s,t,u) and the symmetric functions S1..S4";

  auto base = py::register_exception<Error>(m, "TornheimError", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<SingularPointError>(m, "SingularPointError", base);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<PrefactorZeroError>(m, "PrefactorZeroError", base);
  py::register_exception<MethodUnavailableError>(m, "MethodUnavailableError", base);
  py::register_exception<NotAPoleError>(m, "NotAPoleError", base);
  py::register_exception<app::ParseError>(m, "ParseError", base);

  py::class_<SeriesValue>(m, "SeriesValue")
      .def_readonly("value", &SeriesValue::value)
      .def_readonly("err_estimate", &SeriesValue::err_estimate)
      .def_readonly("terms_used", &SeriesValue::terms_used)
      .def_readonly("max_order", &SeriesValue::max_order)
      .def_readonly("converged", &SeriesValue::converged)
      .def_readonly("magnitude", &SeriesValue::magnitude)
      .def_readonly("method", &SeriesValue::method)
      .def("__repr__", [](const SeriesValue& v) {
        char err[32];
        std::snprintf(err, sizeof err, "%.2e", v.err_estimate);
        return "SeriesValue(" + app::format_complex(v.value) + ", err=" + err + ", method=" + v.method + ")";
      });

  py::class_<SingularityReport>(m, "SingularityReport")
      .def_property_readonly("hyperplane", &SingularityReport::hyperplane)
      .def_readonly("distance", &SingularityReport::distance)
      .def_readonly("nearest", &SingularityReport::nearest)
      .def_property_readonly("function", [](const SingularityReport& r) { return std::string(to_string(r.function)); })
      .def("__repr__", [](const SingularityReport& r) {
        return "SingularityReport(" + r.hyperplane() + ", distance=" + std::to_string(r.distance) + ")";
      });

  py::class_<ResidueEstimate>(m, "ResidueEstimate")
      .def_readonly("value", &ResidueEstimate::value)
      .def_readonly("spread", &ResidueEstimate::spread);

  py::class_<PoleCandidate>(m, "PoleCandidate")
      .def_readonly("location", &PoleCandidate::location)
      .def_readonly("residue", &PoleCandidate::residue)
      .def_readonly("spread", &PoleCandidate::spread);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("value", &OracleResult::value)
      .def_readonly("tail_bound", &OracleResult::tail_bound)
      .def_readonly("terms", &OracleResult::terms);

  m.def("evaluate", &py_eval, py::arg("fn"), py::arg("s"), py::arg("t"), py::arg("u"), py::kw_only(),
        py::arg("tol") = 1e-12, py::arg("max_order") = 120, py::arg("proximity") = 1e-6, py::arg("method") = "auto",
        "Evaluate T, S1, S2, S3 or S4 at (s, t, u).");

  m.def(
      "classify",
      [](const std::string& fn, Complex s, Complex t, Complex u) { return classify({s, t, u}, function_from_string(fn)); },
      py::arg("fn"), py::arg("s"), py::arg("t"), py::arg("u"), "Declared singular hyperplanes of fn with distances.");

  m.def(
      "eval_T_diag",
      [](Complex s, double tol, int max_order) {
        py::gil_scoped_release release;
        return eval_T_diag(s, make_cfg(tol, max_order, 1e-6));
      },
      py::arg("s"), py::kw_only(), py::arg("tol") = 1e-12, py::arg("max_order") = 120);

  m.def(
      "residue_diag",
      [](double s0, double radius) {
        py::gil_scoped_release release;
        return residue_diag(s0, EvalConfig{}, radius);
      },
      py::arg("s0"), py::kw_only(), py::arg("radius") = 1e-3);

  m.def(
      "scan_poles",
      [](double lo, double hi, double step, double radius, double tol) {
        py::gil_scoped_release release;
        return scan_poles(lo, hi, step, make_cfg(tol, 120, 1e-6), radius);
      },
      py::arg("lo") = -4.0, py::arg("hi") = 1.0, py::arg("step") = 0.01, py::kw_only(), py::arg("radius") = 1e-3,
      py::arg("tol") = 1e-12);

  m.def(
      "oracle_T",
      [](Complex s, Complex t, Complex u, int N) {
        py::gil_scoped_release release;
        return oracle_T({s, t, u}, N);
      },
      py::arg("s"), py::arg("t"), py::arg("u"), py::arg("N") = 20000, "Defining double sum, truncated at N.");

  m.def("parse_complex", [](const std::string& text) { return app::parse_complex(text); });
  m.def("format_complex", &app::format_complex);

  m.def(
      "selftest",
      [](bool inject_eta_sign_fault) {
        app::SelftestOptions opts;
        opts.inject_eta_sign_fault = inject_eta_sign_fault;
        std::vector<app::SuiteResult> results;
        {
          py::gil_scoped_release release;
          results = app::run_selftest(opts);
        }
        py::list out;
        for (const app::SuiteResult& r : results) {
          out.append(py::dict(py::arg("name") = r.name, py::arg("passed") = r.passed, py::arg("detail") = r.detail,
                              py::arg("seconds") = r.seconds));
        }
        return out;
      },
      py::arg("inject_eta_sign_fault") = false);
}
