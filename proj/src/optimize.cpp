#include "qtricycle/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qtricycle/analytic.hpp"
#include "qtricycle/golden.hpp"

namespace qtricycle::optim {

namespace {

constexpr double kStationarityStep = 2e-5;  // relative step of the derivative probe

}  // namespace

OptimumReport maximize_cooling_rate(const std::function<double(double)>& cooling_rate,
                                    Window window, double rel_tol, double omega_h,
                                    double t_hot, double t_cold, int grid_points) {
  const CarnotPoint carnot = carnot_quantities(t_hot, t_cold);
  if (!(omega_h > 0.0)) throw std::domain_error("omega_h must be positive");

  const ScalarMaximum peak = maximize_on_window(cooling_rate, window.low, window.high,
                                                rel_tol, grid_points,
                                                /*require_positive=*/true);

  OptimumReport report;
  report.omega_c = peak.position;
  report.cold_force = peak.position / t_cold;
  report.cooling_rate = peak.value;
  report.cop = analytic::cop_from_frequencies(omega_h, peak.position);
  report.cop_normalized = report.cop / carnot.cop;
  report.evaluations = peak.evaluations;
  report.bracket_low = peak.bracket_low;
  report.bracket_high = peak.bracket_high;
  report.converged = peak.converged;
  report.edge_warning = peak.edge;

  // scaled centered-difference derivative; should vanish at an interior max
  const double step = kStationarityStep * report.omega_c;
  if (report.omega_c - step > window.low && report.omega_c + step < window.high &&
      report.cooling_rate > 0.0) {
    const double slope =
        (cooling_rate(report.omega_c + step) - cooling_rate(report.omega_c - step)) /
        (2.0 * step);
    report.evaluations += 2;
    report.stationarity = std::abs(slope) * report.omega_c / report.cooling_rate;
  } else {
    report.stationarity = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

OptimumReport optimize_maser(const maser::MaserConfig& prototype, double rel_tol,
                             int grid_points) {
  const double upper = reversible_cold_frequency(prototype.omega_h, prototype.hot.temperature,
                                                 prototype.cold.temperature);
  // keep the lower sideband open: omega_c must exceed lambda
  const double lower = prototype.lambda > 0.0 ? prototype.lambda * (1.0 + 1e-6) : 0.0;
  if (!(lower < upper)) {
    throw std::domain_error("empty search window: driving amplitude reaches the reversible edge");
  }

  auto objective = [&](double omega_c) {
    const maser::MaserConfig config(prototype.omega_h, omega_c, prototype.lambda,
                                    prototype.hot, prototype.cold);
    return maser::heat_currents(config, maser::solve_limit_cycle(config)).cold_current;
  };

  OptimumReport report =
      maximize_cooling_rate(objective, Window{lower, upper}, rel_tol, prototype.omega_h,
                            prototype.hot.temperature, prototype.cold.temperature,
                            grid_points);

  // replace the frequency-form COP with the one measured from the currents
  const maser::MaserConfig best(prototype.omega_h, report.omega_c, prototype.lambda,
                                prototype.hot, prototype.cold);
  const auto currents = maser::heat_currents(best, maser::solve_limit_cycle(best));
  if (currents.cop) {
    const CarnotPoint carnot =
        carnot_quantities(prototype.hot.temperature, prototype.cold.temperature);
    report.cop = *currents.cop;
    report.cop_normalized = report.cop / carnot.cop;
  }
  return report;
}

OptimumReport optimize_analytic(const Bath& hot, const Bath& cold, double omega_h,
                                FluxModel model, double rel_tol, int grid_points) {
  const double upper = reversible_cold_frequency(omega_h, hot.temperature, cold.temperature);
  const double x_h = omega_h / hot.temperature;

  std::function<double(double)> objective;
  switch (model) {
    case FluxModel::WeakDriving:
      objective = [=](double omega_c) {
        return omega_c * analytic::weak_driving_flux(hot, cold, omega_h, omega_c);
      };
      break;
    case FluxModel::HighTemperature:
      objective = [=](double omega_c) {
        return omega_c * analytic::high_temperature_flux(hot, cold, omega_h, omega_c);
      };
      break;
    case FluxModel::Asymmetric:
      objective = [=](double omega_c) {
        return omega_c * analytic::asymmetric_flux(cold, x_h, omega_c / cold.temperature);
      };
      break;
  }

  return maximize_cooling_rate(objective, Window{0.0, upper}, rel_tol, omega_h,
                               hot.temperature, cold.temperature, grid_points);
}

}  // namespace qtricycle::optim
