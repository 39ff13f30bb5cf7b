#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffmono/action.hpp"
#include "ffmono/dynamics.hpp"
#include "ffmono/errors.hpp"
#include "ffmono/normal_form.hpp"
#include "ffmono/scattering.hpp"

namespace py = pybind11;
using namespace ffmono;

namespace {

// Bundles a perturbed system with its normalizing map, which almost every
// operation needs together.
struct Model {
  PerturbedSystem sys;
  NormalizingMap nm;
  IntegratorConfig cfg;

  Model(const std::vector<Term>& terms, double domain_radius,
        double rel_tol, double abs_tol)
      : sys(FlatPolynomial(terms)) {
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    nm = normalize(FlatPolynomial(terms), domain_radius, cfg);
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "focus-focus scattering monodromy core";

  py::class_<PhasePoint>(m, "PhasePoint")
      .def(py::init<>())
      .def(py::init([](double x, double y, double px, double py) {
             return PhasePoint{x, y, px, py};
           }),
           py::arg("x"), py::arg("y"), py::arg("px"), py::arg("py"))
      .def_readwrite("x", &PhasePoint::x)
      .def_readwrite("y", &PhasePoint::y)
      .def_readwrite("px", &PhasePoint::px)
      .def_readwrite("py", &PhasePoint::py);

  py::class_<ComplexPair>(m, "ComplexPair")
      .def(py::init([](Complex z1, Complex z2) {
             return ComplexPair{z1, z2};
           }),
           py::arg("z1"), py::arg("z2"))
      .def_readwrite("z1", &ComplexPair::z1)
      .def_readwrite("z2", &ComplexPair::z2);

  py::class_<Term>(m, "Term")
      .def(py::init([](int a, int b, Complex coeff) {
             return Term{a, b, coeff};
           }),
           py::arg("a"), py::arg("b"), py::arg("coeff"))
      .def_readwrite("a", &Term::a)
      .def_readwrite("b", &Term::b)
      .def_readwrite("coeff", &Term::coeff);

  py::class_<ScatteringRecord>(m, "ScatteringRecord")
      .def_property_readonly("c",
                             [](const ScatteringRecord& r) {
                               return r.c.value();
                             })
      .def_readonly("transit_tau", &ScatteringRecord::transit_tau)
      .def_readonly("phase", &ScatteringRecord::phase)
      .def_readonly("entry_point", &ScatteringRecord::entry_point)
      .def_readonly("exit_point", &ScatteringRecord::exit_point);

  py::class_<MonodromyResult>(m, "MonodromyResult")
      .def_readonly("radius", &MonodromyResult::radius)
      .def_readonly("samples", &MonodromyResult::samples)
      .def_readonly("phases_raw", &MonodromyResult::phases_raw)
      .def_readonly("phases", &MonodromyResult::phases)
      .def_readonly("winding", &MonodromyResult::winding)
      .def_readonly("max_unwrap_jump", &MonodromyResult::max_unwrap_jump);

  py::class_<Model>(m, "Model")
      .def(py::init<const std::vector<Term>&, double, double, double>(),
           py::arg("terms") = std::vector<Term>{},
           py::arg("domain_radius") = 0.3, py::arg("rel_tol") = 1e-10,
           py::arg("abs_tol") = 1e-12)
      .def_property_readonly("certified_radius",
                             [](const Model& md) {
                               return md.nm.certified_radius();
                             })
      .def("hamiltonian",
           [](const Model& md, const ComplexPair& z) {
             return md.sys.hamiltonian(z);
           },
           py::arg("z"))
      .def("h1",
           [](const Model& md, const PhasePoint& p) { return md.sys.h1(p); },
           py::arg("p"))
      .def("h2",
           [](const Model& md, const PhasePoint& p) { return md.sys.h2(p); },
           py::arg("p"))
      .def("forward",
           [](const Model& md, const ComplexPair& z) {
             return md.nm.forward(z);
           },
           py::arg("z"))
      .def("inverse",
           [](const Model& md, const ComplexPair& w) {
             return md.nm.inverse(w);
           },
           py::arg("w"))
      .def("loop_action",
           [](const Model& md, const PhasePoint& w, int nodes) {
             return loop_action(md.sys, md.nm, w, md.cfg, nodes);
           },
           py::arg("w"), py::arg("nodes") = 256)
      .def("disk_action",
           [](const Model& md, const PhasePoint& z, int grid) {
             return disk_action(md.sys, md.nm, z, grid);
           },
           py::arg("z"), py::arg("grid") = 32)
      .def("flatness_profile",
           [](const Model& md, const std::vector<double>& radii, int samples,
              std::uint64_t seed) {
             return flatness_profile(md.sys, md.nm, radii, samples, seed);
           },
           py::arg("radii"), py::arg("samples") = 8, py::arg("seed") = 0)
      .def("scattering_phase",
           [](const Model& md, Complex c, double eps) {
             return scattering_phase(md.sys, md.nm,
                                     EnergyMomentum{c.real(), c.imag()}, eps,
                                     md.cfg);
           },
           py::arg("c"), py::arg("eps") = 0.5)
      .def("monodromy_scan",
           [](const Model& md, double r, int n, double eps, bool clockwise) {
             return monodromy_scan(md.sys, md.nm, r, n, eps, md.cfg,
                                   clockwise);
           },
           py::arg("r"), py::arg("n"), py::arg("eps") = 0.5,
           py::arg("clockwise") = false)
      .def("singular_fiber_probe",
           [](const Model& md, double s, double eps, double T) {
             return singular_fiber_probe(md.sys, md.nm, s, eps, T, md.cfg);
           },
           py::arg("s"), py::arg("eps"), py::arg("T"));

  m.def("loop_action_standard", &loop_action_standard, py::arg("z"),
        py::arg("nodes") = 256);
  m.def("scattering_phase_standard", &scattering_phase_standard,
        py::arg("c"));
  m.def("scattering_phase_standard_numerical",
        &scattering_phase_standard_numerical, py::arg("c"), py::arg("T"),
        py::arg("nodes") = 4096);
  m.def("transit_time_standard", &transit_time_standard, py::arg("c"),
        py::arg("eps"));
  m.def("mu", &mu, py::arg("c"));
  m.def("xi_section", &xi_section, py::arg("c"), py::arg("s"),
        py::arg("eps"));
  m.def("eta_section", &eta_section, py::arg("c"), py::arg("s"),
        py::arg("eps"));
  m.def("unwrap_phases",
        [](const std::vector<double>& raw) {
          double max_jump = 0.0;
          std::vector<double> out = unwrap_phases(raw, &max_jump);
          return py::make_tuple(out, max_jump);
        },
        py::arg("raw"));
  m.def("winding_from_phases", &winding_from_phases, py::arg("unwrapped"));
  m.def("oscillator_deflection",
        [](double h, double l, double T) {
          return oscillator_deflection(h, l, T, IntegratorConfig{});
        },
        py::arg("h"), py::arg("l"), py::arg("T") = 20.0);

  py::register_exception<NumericalError>(m, "NumericalError",
                                         PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
}
