#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swell/cli.hpp"
#include "swell/experiments.hpp"
#include "swell/peaks.hpp"
#include "swell/poles.hpp"
#include "swell/quadrature.hpp"
#include "swell/scattering.hpp"

namespace py = pybind11;
using namespace swell;

PYBIND11_MODULE(_core, m) {
  m.doc() = "s-wave square-well scattering";
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<PotentialWell>(m, "PotentialWell")
      .def_static("from_depth", &PotentialWell::from_depth, py::arg("a"), py::arg("v0"))
      .def_static("from_strength", &PotentialWell::from_strength, py::arg("a"), py::arg("alpha"))
      .def_property_readonly("a", &PotentialWell::a)
      .def_property_readonly("v0", &PotentialWell::v0)
      .def_property_readonly("alpha", &PotentialWell::alpha)
      .def_property_readonly("qb", &PotentialWell::qb)
      .def("scaled", &PotentialWell::scaled, py::arg("factor"))
      .def("__repr__", [](const PotentialWell& w) {
        std::ostringstream s;
        s << "PotentialWell(a=" << w.a() << ", v0=" << w.v0() << ", alpha=" << w.alpha() << ")";
        return s.str();
      });

  py::class_<ScatterSample>(m, "ScatterSample")
      .def_readonly("k", &ScatterSample::k)
      .def_readonly("q", &ScatterSample::q)
      .def_readonly("theta", &ScatterSample::theta)
      .def_readonly("phi", &ScatterSample::phi)
      .def_readonly("sigma", &ScatterSample::sigma)
      .def_readonly("sigma_theta", &ScatterSample::sigma_theta)
      .def_readonly("sigma_phi", &ScatterSample::sigma_phi)
      .def_readonly("tau", &ScatterSample::tau)
      .def_readonly("ell", &ScatterSample::ell)
      .def_readonly("p_trap", &ScatterSample::p_trap)
      .def_readonly("a2", &ScatterSample::a2)
      .def_readonly("r0", &ScatterSample::r0);

  m.def("scatter_sample", &scatter_sample, py::arg("well"), py::arg("k"));
  m.def(
      "scatter_scan",
      [](const PotentialWell& w, const std::vector<double>& ks) { return scatter_scan(w, ks); },
      py::arg("well"), py::arg("ks"));
  m.def("time_delay", &time_delay);
  m.def("traversal_distance", &traversal_distance);
  m.def("trapping_probability", &trapping_probability);
  m.def("resonant_cross_section", &resonant_cross_section);
  m.def("phase_resonant", &phase_resonant);
  m.def("s_matrix", &s_matrix);
  m.def(
      "trapping_probability_quadrature",
      [](const PotentialWell& w, double k, double tol) { return trapping_probability_adaptive(w, k, tol).value; },
      py::arg("well"), py::arg("k"), py::arg("tol") = 1e-12);

  py::enum_<PoleKind>(m, "PoleKind")
      .value("bound", PoleKind::bound)
      .value("resonance", PoleKind::resonance)
      .value("virtual_state", PoleKind::virtual_state);

  py::class_<PoleK>(m, "PoleK")
      .def_readonly("value", &PoleK::value)
      .def_readonly("kappa", &PoleK::kappa)
      .def_readonly("modulus", &PoleK::modulus)
      .def_readonly("kind", &PoleK::kind)
      .def_readonly("residual", &PoleK::residual);

  m.def(
      "find_poles",
      [](const PotentialWell& w, double re_max, std::optional<double> im_min, bool include_bound) {
        PoleSearchConfig cfg = PoleSearchConfig::for_well(w, re_max);
        if (im_min) cfg.im_min = *im_min;
        cfg.include_bound = include_bound;
        return find_poles(w, cfg);
      },
      py::arg("well"), py::arg("re_max") = 4.0, py::arg("im_min") = py::none(), py::arg("include_bound") = true);
  m.def("bound_states", &bound_states);

  py::class_<ResonanceRecord>(m, "ResonanceRecord")
      .def_readonly("n", &ResonanceRecord::n)
      .def_readonly("k_star", &ResonanceRecord::k_star)
      .def_readonly("k_tau", &ResonanceRecord::k_tau)
      .def_readonly("k_p", &ResonanceRecord::k_p)
      .def_readonly("k_sigma", &ResonanceRecord::k_sigma)
      .def_readonly("phi_at_kstar", &ResonanceRecord::phi_at_kstar)
      .def_readonly("ell_ratio", &ResonanceRecord::ell_ratio)
      .def_readonly("kappa", &ResonanceRecord::kappa)
      .def_readonly("modulus", &ResonanceRecord::modulus)
      .def_readonly("pole", &ResonanceRecord::pole)
      .def_readonly("star_boundary", &ResonanceRecord::star_boundary)
      .def_readonly("tau_boundary", &ResonanceRecord::tau_boundary);

  m.def(
      "resonance_report",
      [](const PotentialWell& w, double k_max, double k_min) {
        ReportOptions o;
        o.k_min = k_min;
        return resonance_report(w, k_max, o);
      },
      py::arg("well"), py::arg("k_max"), py::arg("k_min") = kMinWaveNumber);
  m.def(
      "first_resonance", [](const PotentialWell& w) { return first_resonance(w); }, py::arg("well"));

  py::class_<Table1Row>(m, "Table1Row")
      .def_readonly("well_label", &Table1Row::well_label)
      .def_readonly("well", &Table1Row::well)
      .def_readonly("record", &Table1Row::record);
  m.def("table1", &table1, py::call_guard<py::gil_scoped_release>());

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("alpha", &SweepPoint::alpha)
      .def_readonly("qb", &SweepPoint::qb)
      .def_readonly("k_star_1", &SweepPoint::k_star_1)
      .def_readonly("ell_ratio_1", &SweepPoint::ell_ratio_1)
      .def_readonly("boundary", &SweepPoint::boundary);
  m.def("alpha_sweep", &alpha_sweep, py::arg("alpha_min"), py::arg("alpha_max"), py::arg("n"),
        py::arg("a_fixed"), py::call_guard<py::gil_scoped_release>());

  py::class_<ScalingReport>(m, "ScalingReport")
      .def_readonly("factor", &ScalingReport::factor)
      .def_readonly("phi_dev", &ScalingReport::phi_dev)
      .def_readonly("ell_dev", &ScalingReport::ell_dev)
      .def_readonly("tau_dev", &ScalingReport::tau_dev)
      .def_readonly("passed", &ScalingReport::pass);
  m.def("scaling_check", &scaling_check, py::arg("well"), py::arg("factor"), py::arg("n_points") = 257);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
