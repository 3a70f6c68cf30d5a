#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photongas/cavity.hpp"
#include "photongas/condensate.hpp"
#include "photongas/constants.hpp"
#include "photongas/errors.hpp"
#include "photongas/finite_gas.hpp"
#include "photongas/microcavity.hpp"
#include "photongas/polylog.hpp"
#include "photongas/thermo.hpp"

namespace py = pybind11;
using namespace photongas;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ideal photon gas thermodynamics in reflecting cavities";

    py::register_exception<ConvergenceError>(m, "ConvergenceError");

    m.attr("hbar") = PhysicalConstants::hbar;
    m.attr("c") = PhysicalConstants::c;
    m.attr("k_B") = PhysicalConstants::k_B;
    m.attr("hbar_c") = PhysicalConstants::hbar_c;

    m.def("beta_from_temperature", &beta_from_temperature, py::arg("temperature_K"),
          "Inverse thermal energy 1/(k_B T) [1/J]");
    m.def("zeta", &zeta, py::arg("p"), "Riemann zeta at integer p >= 2");
    m.def("polylog", &polylog, py::arg("p"), py::arg("z"),
          "Polylogarithm sum z^n/n^p for z in [0, 1], integer p >= 2");

    // --- geometry ---------------------------------------------------------
    py::class_<BoxCavity>(m, "BoxCavity")
        .def(py::init([](double l1, double l2, double l3) { return BoxCavity{l1, l2, l3}; }),
             py::arg("L1"), py::arg("L2"), py::arg("L3"))
        .def_readwrite("L1", &BoxCavity::L1)
        .def_readwrite("L2", &BoxCavity::L2)
        .def_readwrite("L3", &BoxCavity::L3);

    py::class_<MirrorMicrocavity>(m, "MirrorMicrocavity")
        .def(py::init([](double r_curv, double d0) { return MirrorMicrocavity{r_curv, d0}; }),
             py::arg("R_curv"), py::arg("D0"))
        .def_readwrite("R_curv", &MirrorMicrocavity::R_curv)
        .def_readwrite("D0", &MirrorMicrocavity::D0);

    py::class_<GeometryMeasures>(m, "GeometryMeasures")
        .def_readonly("volume", &GeometryMeasures::volume)
        .def_readonly("area", &GeometryMeasures::area);

    m.def("geometry_measures",
          py::overload_cast<const BoxCavity&>(&geometry_measures), py::arg("box"));
    m.def("geometry_measures",
          py::overload_cast<const MirrorMicrocavity&>(&geometry_measures), py::arg("cavity"));

    py::class_<ModeSpectrum>(m, "ModeSpectrum")
        .def_readonly("epsilon_1", &ModeSpectrum::epsilon_1)
        .def_readonly("lambdas", &ModeSpectrum::lambdas)
        .def_readonly("helicity_degeneracy", &ModeSpectrum::helicity_degeneracy)
        .def_readonly("lambda_cutoff", &ModeSpectrum::lambda_cutoff)
        .def("size", &ModeSpectrum::size)
        .def("lambda_max", &ModeSpectrum::lambda_max);

    m.def("enumerate_modes", &enumerate_modes, py::arg("box"), py::arg("lambda_max"),
          py::arg("max_modes") = static_cast<std::size_t>(10000000),
          "All Dirichlet box modes with lambda = eps - eps_1 <= lambda_max, sorted");

    m.def("weyl_integrated_density", &weyl_integrated_density, py::arg("lambda_"),
          py::arg("volume"), py::arg("area"),
          "Two-term smoothed mode count per unit volume up to lambda");

    py::class_<WeylCoefficients>(m, "WeylCoefficients")
        .def_readonly("bulk", &WeylCoefficients::bulk)
        .def_readonly("surface", &WeylCoefficients::surface);
    m.def("weyl_density_coefficients", &weyl_density_coefficients, py::arg("volume"),
          py::arg("area"));

    // --- thermodynamic limit ----------------------------------------------
    py::enum_<Dimensionality>(m, "Dimensionality")
        .value("bulk3D", Dimensionality::bulk3D)
        .value("surface2D", Dimensionality::surface2D);

    py::enum_<Regime>(m, "Regime")
        .value("normal", Regime::normal)
        .value("condensed", Regime::condensed);

    py::class_<MuSolution>(m, "MuSolution")
        .def_readonly("mu", &MuSolution::mu)
        .def_readonly("condensate_density", &MuSolution::condensate_density)
        .def_readonly("regime", &MuSolution::regime);

    py::class_<CriticalDensities>(m, "CriticalDensities")
        .def_readonly("bulk", &CriticalDensities::bulk)
        .def_readonly("surface", &CriticalDensities::surface);

    py::class_<CriticalEnergy>(m, "CriticalEnergy")
        .def_readonly("bulk_term", &CriticalEnergy::bulk_term)
        .def_readonly("surface_term", &CriticalEnergy::surface_term)
        .def_readonly("total", &CriticalEnergy::total);

    m.def("u_bulk", &u_bulk, py::arg("beta"), py::arg("mu"));
    m.def("u_surface", &u_surface, py::arg("beta"), py::arg("mu"));
    m.def("critical_densities", &critical_densities, py::arg("beta"));
    m.def(
        "solve_mu",
        [](double beta, double target_u, Dimensionality dim) {
            return solve_mu({beta, target_u, dim});
        },
        py::arg("beta"), py::arg("target_u"),
        py::arg("dimensionality") = Dimensionality::bulk3D,
        "Chemical potential at a prescribed mean energy density");
    m.def("u_crit_finite", &u_crit_finite, py::arg("beta"), py::arg("volume"), py::arg("area"));
    m.def("total_critical_energy", &total_critical_energy, py::arg("beta"), py::arg("volume"),
          py::arg("area"));
    m.def("bulk_number_density", &bulk_number_density, py::arg("beta"), py::arg("mu"));
    m.def("bulk_pressure", &bulk_pressure, py::arg("beta"), py::arg("mu"));
    m.def("entropy_limit", &entropy_limit, py::arg("beta"), py::arg("target_u"));

    // --- finite cavity ------------------------------------------------------
    py::class_<FiniteGasOptions>(m, "FiniteGasOptions")
        .def(py::init<>())
        .def_readwrite("required_beta_lambda", &FiniteGasOptions::required_beta_lambda)
        .def_readwrite("include_weyl_tail", &FiniteGasOptions::include_weyl_tail)
        .def_readwrite("max_bisection_steps", &FiniteGasOptions::max_bisection_steps)
        .def_readwrite("solver_rel_tol", &FiniteGasOptions::solver_rel_tol)
        .def_readwrite("solver_rel_limit", &FiniteGasOptions::solver_rel_limit)
        .def_readwrite("max_tail_terms", &FiniteGasOptions::max_tail_terms);

    py::class_<FiniteEnergyDensity>(m, "FiniteEnergyDensity")
        .def_readonly("u_R", &FiniteEnergyDensity::u_R)
        .def_readonly("ground_term", &FiniteEnergyDensity::ground_term)
        .def_readonly("tail_estimate", &FiniteEnergyDensity::tail_estimate);

    py::class_<FiniteGasThermo>(m, "FiniteGasThermo")
        .def_readonly("u", &FiniteGasThermo::u)
        .def_readonly("rho", &FiniteGasThermo::rho)
        .def_readonly("pressure", &FiniteGasThermo::pressure)
        .def_readonly("ground_term", &FiniteGasThermo::ground_term)
        .def_readonly("tail_u", &FiniteGasThermo::tail_u)
        .def_readonly("modes_used", &FiniteGasThermo::modes_used);

    py::class_<FiniteGasResult>(m, "FiniteGasResult")
        .def_readonly("mu_R", &FiniteGasResult::mu_R)
        .def_readonly("u_R", &FiniteGasResult::u_R)
        .def_readonly("ground_term", &FiniteGasResult::ground_term)
        .def_readonly("entropy", &FiniteGasResult::entropy)
        .def_readonly("modes_used", &FiniteGasResult::modes_used)
        .def_readonly("tail_estimate", &FiniteGasResult::tail_estimate);

    m.def("u_finite", &u_finite, py::arg("spectrum"), py::arg("volume"), py::arg("area"),
          py::arg("beta"), py::arg("mu_R"), py::arg("opts") = FiniteGasOptions{});
    m.def("finite_gas_thermo", &finite_gas_thermo, py::arg("spectrum"), py::arg("volume"),
          py::arg("area"), py::arg("beta"), py::arg("mu_R"),
          py::arg("opts") = FiniteGasOptions{});
    m.def("entropy_finite", &entropy_finite, py::arg("spectrum"), py::arg("volume"),
          py::arg("area"), py::arg("beta"), py::arg("mu_R"),
          py::arg("opts") = FiniteGasOptions{});
    m.def("solve_mu_finite", &solve_mu_finite, py::arg("spectrum"), py::arg("volume"),
          py::arg("area"), py::arg("beta"), py::arg("target_u"),
          py::arg("opts") = FiniteGasOptions{});

    py::class_<ScalingPoint>(m, "ScalingPoint")
        .def_readonly("scale", &ScalingPoint::scale)
        .def_readonly("R", &ScalingPoint::R)
        .def_readonly("epsilon_1", &ScalingPoint::epsilon_1)
        .def_readonly("mu_R", &ScalingPoint::mu_R)
        .def_readonly("u1", &ScalingPoint::u1)
        .def_readonly("ground_term", &ScalingPoint::ground_term)
        .def_readonly("entropy", &ScalingPoint::entropy)
        .def_readonly("modes_used", &ScalingPoint::modes_used);

    py::class_<ScalingStudy>(m, "ScalingStudy")
        .def_readonly("points", &ScalingStudy::points)
        .def_readonly("slope", &ScalingStudy::slope);

    py::class_<ScalingOptions>(m, "ScalingOptions")
        .def(py::init<>())
        .def_readwrite("mode_budget", &ScalingOptions::mode_budget)
        .def_readwrite("max_modes", &ScalingOptions::max_modes)
        .def_readwrite("gas", &ScalingOptions::gas);

    m.def("mu_scaling_study", &mu_scaling_study, py::arg("base"), py::arg("scales"),
          py::arg("beta"), py::arg("supercritical_u"), py::arg("opts") = ScalingOptions{});
    m.def("mu_scaling_exponent", &mu_scaling_exponent, py::arg("base"), py::arg("scales"),
          py::arg("beta"), py::arg("supercritical_u"), py::arg("opts") = ScalingOptions{});

    // --- condensate profile -------------------------------------------------
    py::class_<ProfileSample>(m, "ProfileSample")
        .def_readonly("x", &ProfileSample::x)
        .def_readonly("f", &ProfileSample::f);

    m.def("profile_value", &profile_value, py::arg("box"), py::arg("N1"), py::arg("x1"),
          py::arg("x2"), py::arg("x3"),
          "Condensate profile prod_i cos^N1(pi x_i / L_i), coordinates from the center");
    m.def(
        "profile_samples",
        [](const BoxCavity& box, int n1, int axis, int n_points) {
            return profile_samples({box, n1, axis, n_points});
        },
        py::arg("box"), py::arg("N1"), py::arg("axis") = 1, py::arg("n_points") = 512);
    m.def("half_width", &half_width, py::arg("box"), py::arg("N1"), py::arg("axis") = 1,
          "Positive root of cos^N1(pi x / L) = 1/2");

    // --- microcavity application ---------------------------------------------
    py::class_<ReservoirModel>(m, "ReservoirModel")
        .def(py::init([](double ratio) {
                 return ReservoirModel{ratio, 0.0, 0.0};
             }),
             py::arg("ratio") = 50.0)
        .def_static("from_lifetimes", &ReservoirModel::from_lifetimes, py::arg("tau_exc"),
                    py::arg("tau_ph"))
        .def_readwrite("ratio", &ReservoirModel::ratio)
        .def_readonly("tau_exc", &ReservoirModel::tau_exc)
        .def_readonly("tau_ph", &ReservoirModel::tau_ph);

    py::enum_<L0Convention>(m, "L0Convention")
        .value("mirror_spacing", L0Convention::mirror_spacing)
        .value("volume_over_area", L0Convention::volume_over_area);

    py::class_<PowerPrediction>(m, "PowerPrediction")
        .def_readonly("u_crit_surf_total", &PowerPrediction::u_crit_surf_total)
        .def_readonly("l0", &PowerPrediction::l0)
        .def_readonly("l0_convention", &PowerPrediction::l0_convention)
        .def_readonly("power", &PowerPrediction::power);

    m.def("critical_power", &critical_power, py::arg("geometry"), py::arg("temperature_K"),
          py::arg("reservoir"), py::arg("convention") = L0Convention::mirror_spacing);

    py::class_<MicrocavityReport>(m, "MicrocavityReport")
        .def_readonly("temperature_K", &MicrocavityReport::temperature_K)
        .def_readonly("beta", &MicrocavityReport::beta)
        .def_readonly("volume", &MicrocavityReport::volume)
        .def_readonly("area", &MicrocavityReport::area)
        .def_readonly("u_crit_bulk", &MicrocavityReport::u_crit_bulk)
        .def_readonly("u_crit_surface", &MicrocavityReport::u_crit_surface)
        .def_readonly("bulk_energy", &MicrocavityReport::bulk_energy)
        .def_readonly("surface_energy", &MicrocavityReport::surface_energy)
        .def_readonly("total_energy", &MicrocavityReport::total_energy)
        .def_readonly("surface_to_bulk_ratio", &MicrocavityReport::surface_to_bulk_ratio)
        .def_readonly("reservoir_ratio", &MicrocavityReport::reservoir_ratio)
        .def_readonly("power_mirror_spacing", &MicrocavityReport::power_mirror_spacing)
        .def_readonly("power_volume_over_area", &MicrocavityReport::power_volume_over_area);

    m.def("microcavity_report", &microcavity_report, py::arg("geometry"),
          py::arg("temperature_K"), py::arg("reservoir"));
}
