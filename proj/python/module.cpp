#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fastdiam/algorithms.hpp"
#include "fastdiam/bench.hpp"
#include "fastdiam/errors.hpp"
#include "fastdiam/exact.hpp"
#include "fastdiam/generators.hpp"
#include "fastdiam/io.hpp"

namespace py = pybind11;
using namespace fastdiam;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

PointSet point_set_from_array(const DoubleArray& a) {
  if (a.ndim() != 2) throw UsageError("PointSet: expected a 2-d array of shape (n, m)");
  const auto n = static_cast<std::size_t>(a.shape(0));
  const auto m = static_cast<std::size_t>(a.shape(1));
  std::vector<double> coords(a.data(), a.data() + n * m);
  return PointSet(n, m, std::move(coords));
}

std::vector<double> query_from_array(const DoubleArray& a) {
  if (a.ndim() != 1) throw UsageError("expected a 1-d query point");
  return {a.data(), a.data() + a.size()};
}

py::array_t<double> point_set_to_array(const PointSet& set) {
  py::array_t<double> out({set.size(), set.dim()});
  std::copy(set.coords().begin(), set.coords().end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_fastdiam, m) {
  m.doc() = "Exact and certified-approximate diameters of finite point sets";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&point_set_from_array), py::arg("coords"))
      .def_property_readonly("n", &PointSet::size)
      .def_property_readonly("m", &PointSet::dim)
      .def("__len__", &PointSet::size)
      .def("to_numpy", &point_set_to_array)
      .def("__eq__", [](const PointSet& a, const PointSet& b) { return a == b; })
      .def("__repr__", [](const PointSet& s) {
        return "PointSet(n=" + std::to_string(s.size()) + ", m=" + std::to_string(s.dim()) + ")";
      });

  py::class_<FarthestResult>(m, "FarthestResult")
      .def_readonly("index", &FarthestResult::index)
      .def_readonly("dist", &FarthestResult::dist);

  py::class_<DiameterEstimate>(m, "DiameterEstimate")
      .def_readonly("lower", &DiameterEstimate::lower)
      .def_readonly("witness", &DiameterEstimate::witness)
      .def_readonly("scans", &DiameterEstimate::scans)
      .def_readonly("distance_evaluations", &DiameterEstimate::distance_evaluations);

  py::class_<CertifiedBounds>(m, "CertifiedBounds")
      .def_readonly("lower", &CertifiedBounds::lower)
      .def_readonly("upper", &CertifiedBounds::upper)
      .def_readonly("factor", &CertifiedBounds::factor)
      .def_property_readonly("certificate",
                             [](const CertifiedBounds& b) { return std::string(to_string(b.certificate)); })
      .def_readonly("scans", &CertifiedBounds::scans)
      .def_readonly("distance_evaluations", &CertifiedBounds::distance_evaluations);

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("diameter", &ExactResult::diameter)
      .def_readonly("witness", &ExactResult::witness)
      .def_readonly("comparisons", &ExactResult::comparisons);

  m.def("c_star", &c_star);
  m.def("rho_star", &rho_star);

  m.def("distance", [](const DoubleArray& a, const DoubleArray& b) {
    return distance(query_from_array(a), query_from_array(b));
  });
  m.def(
      "farthest",
      [](const PointSet& set, const DoubleArray& query) {
        return farthest(set, query_from_array(query));
      },
      py::arg("set"), py::arg("query"));

  m.def("double_sweep", &double_sweep, py::arg("set"), py::arg("start") = 0);
  m.def("c_star_estimate_2d", &c_star_estimate_2d, py::arg("set"), py::arg("start") = 0);
  m.def(
      "iterative_approx",
      [](const PointSet& set, std::size_t t, std::size_t start) {
        return iterative_approx(set, RunConfig{t, start, 0});
      },
      py::arg("set"), py::arg("t") = 2, py::arg("start") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "randomized_approx",
      [](const PointSet& set, std::size_t t, std::size_t start, std::uint64_t seed) {
        return randomized_approx(set, RunConfig{t, start, seed});
      },
      py::arg("set"), py::arg("t") = 2, py::arg("start") = 0, py::arg("seed") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def("brute_force_diameter", &brute_force_diameter, py::arg("set"),
        py::call_guard<py::gil_scoped_release>());
  m.def("convex_hull_2d", &convex_hull_2d, py::arg("set"));
  m.def("rotating_calipers_diameter_2d", &rotating_calipers_diameter_2d, py::arg("set"));

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::size_t m, std::uint64_t seed,
         std::vector<double> axes) {
        const auto dist = parse_distribution(kind);
        if (!dist) throw UsageError("unknown distribution '" + kind + "'");
        return generate(GeneratorSpec{*dist, n, m, std::move(axes), seed});
      },
      py::arg("kind"), py::arg("n") = 1, py::arg("m") = 1, py::arg("seed") = 0,
      py::arg("axes") = std::vector<double>{});
  m.def("worst_case_five_points", &worst_case_five_points);

  m.def("load_points", &load_points, py::arg("path"));
  m.def("save_points", &save_points, py::arg("set"), py::arg("path"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = bench::run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a fastdiam subcommand; returns (exit_code, stdout, stderr).");
}
