#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "checkers/asymptotics.hpp"
#include "checkers/cli.hpp"
#include "checkers/exact.hpp"
#include "checkers/lattice.hpp"
#include "checkers/special.hpp"
#include "checkers/spectral.hpp"

namespace py = pybind11;
using namespace checkers;

namespace {

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"checkers_cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Feynman checkers in a +-1 lattice gauge field";

  auto base = py::register_exception<Error>(m, "CheckersError", PyExc_RuntimeError);
  py::register_exception<InvalidArgs>(m, "InvalidArgs", base.ptr());
  py::register_exception<TimeTooLarge>(m, "TimeTooLarge", base.ptr());
  py::register_exception<TruncationExceeded>(m, "TruncationExceeded", base.ptr());
  py::register_exception<MassZero>(m, "MassZero", base.ptr());
  py::register_exception<QuadratureUnderresolved>(m, "QuadratureUnderresolved", base.ptr());
  py::register_exception<OutOfSupport>(m, "OutOfSupport", base.ptr());
  py::register_exception<OutOfRange>(m, "OutOfRange", base.ptr());

  py::class_<LatticeParams>(m, "LatticeParams")
      .def(py::init<double, double>(), py::arg("mass"), py::arg("step"))
      .def_property_readonly("mass", &LatticeParams::mass)
      .def_property_readonly("step", &LatticeParams::step)
      .def_property_readonly("coupling", &LatticeParams::coupling)
      .def_property_readonly("norm", &LatticeParams::norm);

  py::class_<GaugeField>(m, "GaugeField")
      .def_static("trivial", &GaugeField::trivial)
      .def_static("homogeneous", &GaugeField::homogeneous)
      .def_static("seeded", &GaugeField::seeded, py::arg("seed"))
      .def("__call__", [](const GaugeField& u, std::int64_t x2, std::int64_t t2) { return u({x2, t2}); },
           py::arg("x2"), py::arg("t2"), "Value on the edge with midpoint (x2/2, t2/2) in lattice units.");

  py::class_<Amplitude>(m, "Amplitude")
      .def_readonly("a1", &Amplitude::a1)
      .def_readonly("a2", &Amplitude::a2)
      .def("probability", &Amplitude::probability)
      .def("__complex__", &Amplitude::value)
      .def("__repr__", [](const Amplitude& a) {
        return "Amplitude(a1=" + std::to_string(a.a1) + ", a2=" + std::to_string(a.a2) + ")";
      });

  py::class_<WaveSlice>(m, "WaveSlice")
      .def_property_readonly("time_index", &WaveSlice::time_index)
      .def_property_readonly("min_x", &WaveSlice::min_x)
      .def_property_readonly("max_x", &WaveSlice::max_x)
      .def("at", &WaveSlice::at, py::arg("xi"))
      .def("amplitudes", [](const WaveSlice& s) {
        return std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
      });

  m.def("evolve_to", &evolve_to, py::arg("ti"), py::arg("params"), py::arg("field"));
  m.def(
      "amplitude",
      [](std::int64_t xi, std::int64_t ti, const LatticeParams& p, const GaugeField& u) { return amplitude({xi, ti}, p, u); },
      py::arg("xi"), py::arg("ti"), py::arg("params"), py::arg("field"));
  m.def(
      "amplitude_bruteforce",
      [](std::int64_t xi, std::int64_t ti, const LatticeParams& p, const GaugeField& u) {
        return amplitude_bruteforce({xi, ti}, p, u);
      },
      py::arg("xi"), py::arg("ti"), py::arg("params"), py::arg("field"));
  m.def(
      "amplitude_closed",
      [](std::int64_t xi, std::int64_t ti, double m) {
        return exact::amplitude_closed_exact(exact::DiagCoords::from_point({xi, ti}), m);
      },
      py::arg("xi"), py::arg("ti"), py::arg("mass"), "Homogeneous field, unit step, exact rational evaluation.");
  m.def(
      "amplitude_integral",
      [](std::int64_t xi, std::int64_t ti, const LatticeParams& p) { return spectral::amplitude_integral({xi, ti}, p); },
      py::arg("xi"), py::arg("ti"), py::arg("params"));
  m.def("hyp2f1_poly", [](std::int64_t a, std::int64_t b, std::int64_t c, double z) {
    return exact::hyp2f1_poly({a, b, c, z});
  });

  m.def("total_probability", &total_probability);
  m.def("cdf_empirical", py::overload_cast<std::int64_t, double, const LatticeParams&, const GaugeField&>(&cdf_empirical),
        py::arg("ti"), py::arg("v"), py::arg("params"), py::arg("field"));
  m.def("moment", py::overload_cast<std::int64_t, int, const LatticeParams&, const GaugeField&>(&moment), py::arg("ti"),
        py::arg("r"), py::arg("params"), py::arg("field"));
  m.def("chirality_reversal_prob",
        py::overload_cast<std::int64_t, const LatticeParams&, const GaugeField&>(&chirality_reversal_prob), py::arg("ti"),
        py::arg("params"), py::arg("field"));

  m.def("limit_cdf", &spectral::limit_cdf, py::arg("v"), py::arg("params"));
  m.def("limit_density", &spectral::limit_density, py::arg("v"), py::arg("params"));
  m.def("moment_limit", &spectral::moment_limit, py::arg("r"), py::arg("params"));
  m.def("limit_cdf_free", &spectral::limit_cdf_free, py::arg("v"), py::arg("params"));

  m.def("bessel_j0", &special::bessel_j0);
  m.def("bessel_j1", &special::bessel_j1);
  m.def("airy_ai", &special::airy_ai);

  m.def(
      "continuum_field",
      [](double x, double t, double m) {
        const auto lim = asymptotics::continuum_field(asymptotics::ContinuumPoint(x, t), m);
        return std::make_tuple(lim.p_density, lim.a1_lim, lim.a2_lim);
      },
      py::arg("x"), py::arg("t"), py::arg("mass"));
  m.def(
      "continuum_free",
      [](double x, double t, double m) { return asymptotics::continuum_free(asymptotics::ContinuumPoint(x, t), m); },
      py::arg("x"), py::arg("t"), py::arg("mass"));
  m.def(
      "chirality_limit",
      [](bool even, const LatticeParams& p) {
        return asymptotics::chirality_limit(even ? asymptotics::Parity::even : asymptotics::Parity::odd, p);
      },
      py::arg("even"), py::arg("params"));
  m.def("chirality_limit_free", &asymptotics::chirality_limit_free, py::arg("params"));
  m.def("theta_tilde", &asymptotics::theta_tilde, py::arg("v"), py::arg("params"));
  m.def(
      "airy_approx_a1",
      [](std::int64_t xi, std::int64_t ti, const LatticeParams& p) { return asymptotics::airy_approx_a1({xi, ti}, p); },
      py::arg("xi"), py::arg("ti"), py::arg("params"));

  m.def("run_cli", &run_cli, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
