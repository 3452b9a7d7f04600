#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "daubloc/cantor_analysis.hpp"
#include "daubloc/error.hpp"
#include "daubloc/experiments.hpp"
#include "daubloc/gamma_core.hpp"
#include "daubloc/radial_sets.hpp"
#include "daubloc/serialize.hpp"
#include "daubloc/spectrum.hpp"
#include "daubloc/verify.hpp"

namespace py = pybind11;
using namespace daubloc;

namespace {

IntervalUnion from_pairs(const std::vector<std::pair<double, double>>& pairs) { return make_union(pairs); }

std::vector<std::pair<double, double>> to_pairs(const IntervalUnion& u) {
  std::vector<std::pair<double, double>> out;
  for (const Interval& piece : u.intervals()) out.emplace_back(piece.a, piece.b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eigenvalues and operator norms of radially symmetric localization operators";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<InconclusiveError>(m, "InconclusiveError", base.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  m.def("fk", &fk, py::arg("k"), py::arg("r"), "r^k e^-r / k!");
  m.def("log_fk", &log_fk, py::arg("k"), py::arg("r"));
  m.def("fk_integral", &fk_integral, py::arg("k"), py::arg("a"), py::arg("b"));
  m.def("fk_tail", &fk_tail, py::arg("k"), py::arg("a"), "Q(k+1, a)");
  m.def("fk_head", &fk_head, py::arg("k"), py::arg("b"), "P(k+1, b)");

  py::class_<IntervalUnion>(m, "IntervalUnion")
      .def(py::init(&from_pairs), py::arg("pairs"), "Profile-domain intervals [(a, b), ...]; sorted and merged")
      .def_property_readonly("intervals", &to_pairs)
      .def_property_readonly("measure", &IntervalUnion::measure)
      .def_property_readonly("sup", &IntervalUnion::sup)
      .def("__len__", &IntervalUnion::size)
      .def("__eq__", [](const IntervalUnion& a, const IntervalUnion& b) { return a == b; })
      .def("__repr__", [](const IntervalUnion& u) { return "IntervalUnion(" + io::dump(io::to_json(u)) + ")"; });

  m.def("cantor_expand", [](double L, int n) { return cantor_expand(CantorSpec(L, n)); }, py::arg("L"), py::arg("n"));
  m.def("cantor_function", &cantor_function, py::arg("L"), py::arg("n"), py::arg("x"));

  m.def("eigenvalue", &eigenvalue, py::arg("E"), py::arg("k"));
  m.def(
      "spectrum_json",
      [](const IntervalUnion& E, std::optional<Index> K) { return io::dump(io::to_json(spectrum(E, K))); },
      py::arg("E"), py::arg("K") = py::none());
  m.def(
      "operator_norm_json", [](const IntervalUnion& E) { return io::dump(io::to_json(operator_norm(E))); },
      py::arg("E"));
  m.def(
      "comb_eigenvalue", [](double s, Index k, double tol) { return comb_eigenvalue(CombSpec(s), k, tol); },
      py::arg("s"), py::arg("k"), py::arg("tol") = 1e-12);
  m.def(
      "comb_norm_json", [](double s, double tol) { return io::dump(io::to_json(comb_norm(CombSpec(s), tol))); },
      py::arg("s"), py::arg("tol") = 1e-12);
  m.attr("COMB_CONSTANT") = kCombConstant;

  m.def("lambda0_closed", &lambda0_closed, py::arg("x"), py::arg("n"));
  m.def("lambda0_recursive", &lambda0_recursive, py::arg("x"), py::arg("n"));
  m.def("normalized_ratio", &normalized_ratio, py::arg("x"), py::arg("n"), py::arg("norm"));
  m.def("relative_area", &relative_area, py::arg("k"), py::arg("s"), py::arg("threeL"));

  m.def(
      "run_ring_json", [](const std::vector<double>& grid) { return io::dump(io::to_json(run_ring(grid))); },
      py::arg("grid"));
  m.def(
      "run_comb_json",
      [](const std::vector<double>& grid, double tol) { return io::dump(io::to_json(run_comb(grid, tol))); },
      py::arg("grid"), py::arg("tol") = 1e-12);
  m.def(
      "run_cantor_json",
      [](int n_max, int x_per_n, bool fup, double fup_const, bool lambda0_only) {
        CantorOptions options;
        options.n_max = n_max;
        options.x_per_n = x_per_n;
        options.fup = fup;
        options.fup_const = fup_const;
        options.lambda0_only = lambda0_only;
        return io::dump(io::to_json(run_cantor(options)));
      },
      py::arg("n_max"), py::arg("x_per_n") = 16, py::arg("fup") = false, py::arg("fup_const") = 1.0,
      py::arg("lambda0_only") = false);
  m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));
  m.def("linear_grid", &linear_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));

  m.def(
      "verify_failures",
      [](const std::string& suite) {
        std::size_t failures = 0;
        for (const auto& result : verify::run_suites(suite)) failures += result.failures();
        return failures;
      },
      py::arg("suite") = "all", py::call_guard<py::gil_scoped_release>());
}
