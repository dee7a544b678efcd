#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ordfix/cli.hpp"
#include "ordfix/counterexamples.hpp"
#include "ordfix/io.hpp"
#include "ordfix/poset_examples.hpp"
#include "ordfix/quadrature.hpp"

namespace py = pybind11;
using ordfix::io::Json;

namespace {

ordfix::HammersteinProblem problem_of(const std::string& config) {
  return ordfix::io::problem_from_json(Json::parse(config));
}

std::string dump(const Json& j) { return ordfix::io::canonical_dump(j); }

}  // namespace

PYBIND11_MODULE(_ordfix, m) {
  m.doc() = "Order-theoretic fixed-point toolkit (native core)";

  static py::exception<ordfix::Error> error(m, "OrdfixError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ordfix::Error& e) {
      py::object kind = py::str(ordfix::to_string(e.kind()));
      PyErr_SetObject(error.ptr(), py::make_tuple(py::str(e.what()), kind).ptr());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("counterexample_names", &ordfix::counterexample_names);
  m.def("poset_example_names", &ordfix::builtin_example_names);
  m.def("solve_fixture_names", &ordfix::cli::solve_fixture_names);

  m.def(
      "verify_counterexample",
      [](const std::string& name, std::size_t n_max, const std::string& lambda1, const std::string& ratio,
         std::size_t truncation) {
        ordfix::CounterexampleParams params;
        params.lambda1 = ordfix::parse_rational(lambda1);
        params.ratio = ordfix::parse_rational(ratio);
        params.truncation = truncation;
        return dump(ordfix::io::to_json(ordfix::verify_counterexample(name, n_max, params)));
      },
      py::arg("name"), py::arg("n_max") = 64, py::arg("lambda1") = "9/10", py::arg("ratio") = "49/100",
      py::arg("truncation") = 256, "Claim report as canonical JSON text.");

  m.def(
      "ramp_at_zero", [](std::size_t n) { return dump(ordfix::io::to_json(ordfix::ramp_at_zero(n))); },
      py::arg("n"), "Exact piecewise element x_n as interchange JSON.");

  m.def(
      "build_grid",
      [](double a, double b, std::size_t count, const std::string& rule) {
        auto g = ordfix::build_grid(a, b, count, ordfix::parse_rule(rule));
        return py::make_tuple(g.nodes, g.weights);
      },
      py::arg("a"), py::arg("b"), py::arg("count"), py::arg("rule") = "trapezoid");

  m.def(
      "compute_lambda", [](const std::string& config) { return ordfix::compute_lambda(problem_of(config)); },
      py::arg("config"));
  m.def(
      "apply_F",
      [](const std::string& config, const std::vector<double>& x) { return ordfix::apply_F(problem_of(config), x); },
      py::arg("config"), py::arg("x"));
  m.def(
      "audit_conditions",
      [](const std::string& config, std::size_t ball_samples, std::uint64_t seed) {
        return dump(ordfix::io::to_json(ordfix::audit_conditions(problem_of(config), ball_samples, seed)));
      },
      py::arg("config"), py::arg("ball_samples") = 200, py::arg("seed") = 0);
  m.def(
      "monotone_solve",
      [](const std::string& config, double eps, std::size_t max_iter, bool override_audit, std::uint64_t seed) {
        ordfix::SolveOptions opt;
        opt.eps = eps;
        opt.max_iter = max_iter;
        opt.override_audit = override_audit;
        opt.seed = seed;
        return dump(ordfix::io::to_json(ordfix::monotone_solve(problem_of(config), opt)));
      },
      py::arg("config"), py::arg("eps") = 1e-12, py::arg("max_iter") = 1000, py::arg("override_audit") = false,
      py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = ordfix::cli::main_entry(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
