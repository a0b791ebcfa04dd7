#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qtricycle/analytic.hpp"
#include "qtricycle/core.hpp"
#include "qtricycle/maser.hpp"
#include "qtricycle/optimize.hpp"
#include "qtricycle/selftest.hpp"
#include "qtricycle/sweep.hpp"

namespace py = pybind11;
using namespace qtricycle;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Limit cycle, heat currents and optimal cooling performance of a "
            "driven three-level quantum refrigerator (hbar = k_B = 1)";

  py::enum_<BathLabel>(m, "BathLabel")
      .value("hot", BathLabel::Hot)
      .value("cold", BathLabel::Cold);

  py::class_<Bath>(m, "Bath")
      .def(py::init<double, double, double, BathLabel>(), py::arg("temperature"),
           py::arg("dissipation"), py::arg("dimension") = 3.0,
           py::arg("label") = BathLabel::Hot)
      .def_readonly("temperature", &Bath::temperature)
      .def_readonly("dissipation", &Bath::dissipation)
      .def_readonly("dimension", &Bath::dimension)
      .def_readonly("label", &Bath::label)
      .def("weakly_coupled", &Bath::weakly_coupled)
      .def("__repr__", [](const Bath& bath) {
        std::ostringstream out;
        out << "Bath(T=" << bath.temperature << ", gamma=" << bath.dissipation
            << ", d=" << bath.dimension << ", " << to_string(bath.label) << ")";
        return out.str();
      });

  m.def("planck_occupation", &planck_occupation, py::arg("omega"), py::arg("temperature"));
  m.def("relaxation_rate", &relaxation_rate, py::arg("bath"), py::arg("omega"));
  m.def("thermodynamic_force", &thermodynamic_force, py::arg("omega"), py::arg("temperature"));
  m.def(
      "carnot_quantities",
      [](double t_hot, double t_cold) {
        auto point = carnot_quantities(t_hot, t_cold);
        return py::make_tuple(point.efficiency, point.cop);
      },
      py::arg("t_hot"), py::arg("t_cold"), "returns (efficiency, cop)");
  m.def("reversible_cold_frequency", &reversible_cold_frequency, py::arg("omega_h"),
        py::arg("t_hot"), py::arg("t_cold"));

  py::class_<maser::MaserConfig>(m, "MaserConfig")
      .def(py::init<double, double, double, Bath, Bath>(), py::arg("omega_h"),
           py::arg("omega_c"), py::arg("lambda_"), py::arg("hot"), py::arg("cold"))
      .def_readonly("omega_h", &maser::MaserConfig::omega_h)
      .def_readonly("omega_c", &maser::MaserConfig::omega_c)
      .def_readonly("lambda_", &maser::MaserConfig::lambda)
      .def_readonly("hot", &maser::MaserConfig::hot)
      .def_readonly("cold", &maser::MaserConfig::cold)
      .def_property_readonly("omega_w", &maser::MaserConfig::omega_w);

  py::class_<maser::LimitCycle>(m, "LimitCycle")
      .def_readonly("n1", &maser::LimitCycle::n1)
      .def_readonly("n2", &maser::LimitCycle::n2)
      .def_readonly("n3", &maser::LimitCycle::n3)
      .def_readonly("coherence", &maser::LimitCycle::coherence)
      .def_readonly("residual", &maser::LimitCycle::residual);

  py::class_<maser::CurrentsReport>(m, "CurrentsReport")
      .def_readonly("hot_current", &maser::CurrentsReport::hot_current)
      .def_readonly("cold_current", &maser::CurrentsReport::cold_current)
      .def_readonly("power", &maser::CurrentsReport::power)
      .def_readonly("flux", &maser::CurrentsReport::flux)
      .def_readonly("cop", &maser::CurrentsReport::cop)
      .def_readonly("entropy_production", &maser::CurrentsReport::entropy_production);

  m.def("averaged_hamiltonian", &maser::averaged_hamiltonian, py::arg("config"));
  m.def("solve_limit_cycle", &maser::solve_limit_cycle, py::arg("config"));
  m.def("heat_currents", &maser::heat_currents, py::arg("config"), py::arg("cycle"));
  m.def("liouvillian_steady_state", &maser::liouvillian_steady_state, py::arg("config"));
  m.def("heat_current_general", &maser::heat_current_general, py::arg("config"),
        py::arg("steady"), py::arg("bath"));
  m.def("entropy_production", &maser::entropy_production, py::arg("report"),
        py::arg("t_hot"), py::arg("t_cold"));

  m.def("weak_driving_flux", &analytic::weak_driving_flux, py::arg("hot"), py::arg("cold"),
        py::arg("omega_h"), py::arg("omega_c"));
  m.def("high_temperature_flux", &analytic::high_temperature_flux, py::arg("hot"),
        py::arg("cold"), py::arg("omega_h"), py::arg("omega_c"));
  m.def("asymmetric_flux", &analytic::asymmetric_flux, py::arg("cold"), py::arg("x_h"),
        py::arg("x_c"));
  m.def("cop_from_forces", &analytic::cop_from_forces, py::arg("x_h"), py::arg("x_c"),
        py::arg("carnot_cop"));
  m.def("cop_from_frequencies", &analytic::cop_from_frequencies, py::arg("omega_h"),
        py::arg("omega_c"));
  m.def("optimal_cop_from_coefficient", &analytic::optimal_cop_from_coefficient,
        py::arg("coefficient"), py::arg("carnot_cop"));
  m.def("benchmark_cop", &analytic::benchmark_cop, py::arg("dimension"),
        py::arg("carnot_cop"));
  m.def("ynca_efficiency", &analytic::ynca_efficiency, py::arg("carnot_efficiency"));
  m.def("chi_optimal_cop", &analytic::chi_optimal_cop, py::arg("carnot_cop"));
  m.def(
      "onsager_optimal_cop",
      [](double coupling, double carnot_cop) {
        return analytic::onsager_optimal_cop(
            analytic::OnsagerParams::from_coupling(coupling), carnot_cop);
      },
      py::arg("coupling"), py::arg("carnot_cop"));

  py::class_<analytic::CoefficientEstimate>(m, "CoefficientEstimate")
      .def_readonly("value", &analytic::CoefficientEstimate::value)
      .def_readonly("order", &analytic::CoefficientEstimate::order)
      .def_readonly("residual", &analytic::CoefficientEstimate::residual)
      .def_readonly("converged", &analytic::CoefficientEstimate::converged)
      .def_readonly("ratios", &analytic::CoefficientEstimate::ratios);

  m.def("estimate_cold_force_coefficient", &analytic::estimate_cold_force_coefficient,
        py::arg("flux"), py::arg("xh_schedule") = analytic::default_force_schedule(),
        py::arg("accept_tol") = 1e-4,
        "flux is a callable (x_h, x_c) -> quanta flux");

  py::class_<optim::OptimumReport>(m, "OptimumReport")
      .def_readonly("omega_c", &optim::OptimumReport::omega_c)
      .def_readonly("cold_force", &optim::OptimumReport::cold_force)
      .def_readonly("cooling_rate", &optim::OptimumReport::cooling_rate)
      .def_readonly("cop", &optim::OptimumReport::cop)
      .def_readonly("cop_normalized", &optim::OptimumReport::cop_normalized)
      .def_readonly("evaluations", &optim::OptimumReport::evaluations)
      .def_readonly("converged", &optim::OptimumReport::converged)
      .def_readonly("edge_warning", &optim::OptimumReport::edge_warning)
      .def_readonly("stationarity", &optim::OptimumReport::stationarity);

  py::enum_<optim::FluxModel>(m, "FluxModel")
      .value("weak_driving", optim::FluxModel::WeakDriving)
      .value("high_temperature", optim::FluxModel::HighTemperature)
      .value("asymmetric", optim::FluxModel::Asymmetric);

  m.def("optimize_maser", &optim::optimize_maser, py::arg("prototype"),
        py::arg("rel_tol") = 1e-9, py::arg("grid_points") = 64);
  m.def("optimize_analytic", &optim::optimize_analytic, py::arg("hot"), py::arg("cold"),
        py::arg("omega_h"), py::arg("model"), py::arg("rel_tol") = 1e-9,
        py::arg("grid_points") = 64);

  py::enum_<sweep::LambdaMode>(m, "LambdaMode")
      .value("zero", sweep::LambdaMode::Zero)
      .value("window_ratio", sweep::LambdaMode::WindowRatio);

  py::class_<sweep::Spec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("samples", &sweep::Spec::samples)
      .def_readwrite("seed", &sweep::Spec::seed)
      .def_readwrite("dimension", &sweep::Spec::dimension)
      .def_readwrite("lambda_mode", &sweep::Spec::lambda_mode)
      .def_readwrite("lambda_ratio", &sweep::Spec::lambda_ratio)
      .def_readwrite("max_hot_force", &sweep::Spec::max_hot_force)
      .def_readwrite("max_gamma_ratio", &sweep::Spec::max_gamma_ratio)
      .def_readwrite("optimizer_tol", &sweep::Spec::optimizer_tol);

  py::class_<sweep::Record>(m, "SweepRecord")
      .def_readonly("index", &sweep::Record::index)
      .def_readonly("t_hot", &sweep::Record::t_hot)
      .def_readonly("t_cold", &sweep::Record::t_cold)
      .def_readonly("gamma_hot", &sweep::Record::gamma_hot)
      .def_readonly("gamma_cold", &sweep::Record::gamma_cold)
      .def_readonly("omega_h", &sweep::Record::omega_h)
      .def_readonly("lambda_", &sweep::Record::lambda)
      .def_readonly("carnot_cop", &sweep::Record::carnot_cop)
      .def_readonly("omega_c_opt", &sweep::Record::omega_c_opt)
      .def_readonly("cop", &sweep::Record::cop)
      .def_readonly("cop_normalized", &sweep::Record::cop_normalized)
      .def_readonly("benchmark", &sweep::Record::benchmark)
      .def_readonly("excess", &sweep::Record::excess)
      .def_readonly("error", &sweep::Record::error)
      .def("ok", &sweep::Record::ok)
      .def("valid", &sweep::Record::valid);

  py::class_<sweep::Summary>(m, "SweepSummary")
      .def_readonly("count", &sweep::Summary::count)
      .def_readonly("failures", &sweep::Summary::failures)
      .def_readonly("valid_count", &sweep::Summary::valid_count)
      .def_readonly("max_excess", &sweep::Summary::max_excess)
      .def_readonly("max_excess_valid", &sweep::Summary::max_excess_valid)
      .def_readonly("mean_abs_excess_valid", &sweep::Summary::mean_abs_excess_valid);

  m.def("sample_configuration", &sweep::sample_configuration, py::arg("seed"),
        py::arg("index"), py::arg("spec"));
  m.def(
      "run_sweep",
      [](const sweep::Spec& spec, int jobs) {
        auto result = sweep::run(spec, jobs);
        return py::make_tuple(result.records, result.summary);
      },
      py::arg("spec"), py::arg("jobs") = 1, "returns (records, summary)");
  m.def("emit_curve", &sweep::emit_curve, py::arg("dimension"), py::arg("carnot_grid"));

  m.def(
      "self_test",
      [](int samples) {
        auto report = selftest::run(samples);
        py::list checks;
        for (const auto& check : report.checks) {
          py::dict row;
          row["name"] = check.name;
          row["worst_residual"] = check.worst_residual;
          row["tolerance"] = check.tolerance;
          row["passed"] = check.passed;
          checks.append(row);
        }
        return py::make_tuple(report.all_passed(), checks);
      },
      py::arg("samples") = 200, "returns (all_passed, checks)");

  m.attr("__version__") = "0.1.0";
}
