#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "impurity/bath.hpp"
#include "impurity/bo_bosonic.hpp"
#include "impurity/bo_fermionic.hpp"
#include "impurity/run_config.hpp"
#include "impurity/statfun.hpp"
#include "impurity/thermo.hpp"
#include "impurity/verify.hpp"

namespace py = pybind11;
using namespace impurity;

namespace {

thermo::SpectralProvider provider_for(const std::string& stat, double omega_s, double epsilon_s,
                                      double eta, double gamma) {
    const auto bath = BathModel::drude(eta, gamma);
    if (parse_statistics(stat).is_bose()) return thermo::spectral_provider(BosonicBO(omega_s, bath));
    return thermo::spectral_provider(FermionicBO(epsilon_s, bath));
}

}  // namespace

PYBIND11_MODULE(_impurity_thermo, m) {
    m.doc() = "Thermodynamics of Brownian-oscillator impurity systems";

    py::register_exception<Error>(m, "ImpurityError");

    py::class_<BathModel>(m, "BathModel")
        .def_static("drude", &BathModel::drude, py::arg("eta"), py::arg("gamma"))
        .def_readonly("eta", &BathModel::eta)
        .def_readonly("gamma", &BathModel::gamma);
    m.def("phi_tilde", &phi_tilde, py::arg("bath"), py::arg("omega"));
    m.def("phi_tilde_laplace", &phi_tilde_laplace, py::arg("bath"), py::arg("varpi"));

    py::class_<Statistics>(m, "Statistics")
        .def_static("bose", &Statistics::bose)
        .def_static("fermi", &Statistics::fermi)
        .def("matsubara", &Statistics::matsubara, py::arg("n"), py::arg("beta"))
        .def_property_readonly("is_bose", &Statistics::is_bose);
    m.def("occupation", &occupation, py::arg("statistics"), py::arg("beta"), py::arg("omega"));
    m.def("fermi_pade01", &fermi_pade01, py::arg("beta"), py::arg("omega"));
    m.def("fermi_lowest_matsubara", &fermi_lowest_matsubara, py::arg("beta"), py::arg("omega"));

    py::class_<BosonicBO>(m, "BosonicBO")
        .def(py::init<double, BathModel>(), py::arg("omega_s"), py::arg("bath"))
        .def_readonly("omega_s", &BosonicBO::omega_s)
        .def("chi_ss", [](const BosonicBO& s, double w) { return chi_ss(s, w); }, py::arg("omega"))
        .def("chi_sb",
             [](const BosonicBO& s, double w, double l2) { return chi_sb(s, w, l2); },
             py::arg("omega"), py::arg("lambda2") = 1.0)
        .def("varphi", [](const BosonicBO& s, double w) { return varphi(s, w); }, py::arg("omega"))
        .def("vartheta", [](const BosonicBO& s, double v) { return vartheta(s, v); },
             py::arg("varpi"));

    py::class_<FermionicBO>(m, "FermionicBO")
        .def(py::init<double, BathModel>(), py::arg("epsilon_s"), py::arg("bath"))
        .def_readonly("epsilon_s", &FermionicBO::epsilon_s)
        .def("omega_s", &FermionicBO::omega_s)
        .def("g_ss", [](const FermionicBO& s, double w) { return g_ss(s, w); }, py::arg("omega"))
        .def("g_sb",
             [](const FermionicBO& s, double w, double l2) { return g_sb(s, w, l2); },
             py::arg("omega"), py::arg("lambda2") = 1.0)
        .def("varphi", [](const FermionicBO& s, double w) { return varphi(s, w); },
             py::arg("omega"))
        .def("vartheta", [](const FermionicBO& s, double v) { return vartheta(s, v); },
             py::arg("varpi"))
        .def("x_functions", [](const FermionicBO& s, double w) { return x_functions(s, w); },
             py::arg("omega"));

    py::class_<thermo::ThermoPoint>(m, "ThermoPoint")
        .def_readonly("T", &thermo::ThermoPoint::T)
        .def_readonly("A", &thermo::ThermoPoint::A)
        .def_readonly("U", &thermo::ThermoPoint::U)
        .def_readonly("S", &thermo::ThermoPoint::S);

    py::class_<thermo::SpectralProvider>(m, "SpectralProvider")
        .def("varphi", [](const thermo::SpectralProvider& sp, double w) { return sp.varphi(w); },
             py::arg("omega"))
        .def("vartheta",
             [](const thermo::SpectralProvider& sp, double v) { return sp.vartheta(v); },
             py::arg("varpi"));
    m.def("spectral_provider", &provider_for, py::arg("statistics"), py::arg("omega_s") = 1.0,
          py::arg("epsilon_s") = -1.0, py::arg("eta") = 0.4, py::arg("gamma") = 4.0);

    m.def("a_by_matsubara",
          [](const thermo::SpectralProvider& sp, double T) { return thermo::a_by_matsubara(sp, T); },
          py::arg("provider"), py::arg("T"));
    m.def("a_by_integral", &thermo::a_by_integral, py::arg("provider"), py::arg("T"));
    m.def("entropy", &thermo::entropy, py::arg("provider"), py::arg("T"));
    m.def("internal_energy", &thermo::internal_energy, py::arg("provider"), py::arg("T"));
    m.def("thermo_point", &thermo::thermo_point, py::arg("provider"), py::arg("T"));
    m.def("equal_area_check",
          [](const thermo::SpectralProvider& sp) {
              const auto r = thermo::equal_area_check(sp);
              return py::make_tuple(r.phi_area, r.theta_area, r.rel_diff);
          },
          py::arg("provider"));

    m.def("run_verification", [](const std::string& stat) {
        RunConfig cfg;
        cfg.statistics = parse_statistics(stat);
        return verify::to_json(verify::run_verification(cfg));
    });
}
