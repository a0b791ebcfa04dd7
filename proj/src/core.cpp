#include "qtricycle/core.hpp"

#include <cmath>

namespace qtricycle {

namespace {

void require_finite_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

const char* to_string(BathLabel label) {
  return label == BathLabel::Hot ? "hot" : "cold";
}

Bath::Bath(double temperature_, double dissipation_, double dimension_, BathLabel label_)
    : temperature(temperature_), dissipation(dissipation_), dimension(dimension_), label(label_) {
  require_finite_positive(temperature, "bath temperature");
  require_finite_positive(dissipation, "bath dissipation strength");
  if (!(dimension >= 1.0) || dimension > QTRICYCLE_MAX_BATH_DIMENSION) {
    throw std::domain_error("bath dimensionality out of range [1, " +
                            std::to_string(QTRICYCLE_MAX_BATH_DIMENSION) + "]");
  }
#ifndef QTRICYCLE_REAL_DIMENSION
  if (dimension != std::floor(dimension)) {
    throw std::domain_error("bath dimensionality must be an integer "
                            "(build with QTRICYCLE_REAL_DIMENSION to relax)");
  }
#endif
}

ForcePair::ForcePair(double hot_, double cold_) : hot(hot_), cold(cold_) {
  require_finite_positive(hot, "hot force");
  require_finite_positive(cold, "cold force");
}

double planck_occupation(double omega, double temperature) {
  require_finite_positive(omega, "frequency");
  require_finite_positive(temperature, "temperature");
  // expm1 keeps the high-temperature regime omega << T accurate
  return 1.0 / std::expm1(omega / temperature);
}

double relaxation_rate(const Bath& bath, double omega) {
  if (omega == 0.0 || !std::isfinite(omega)) {
    throw std::domain_error("relaxation rate undefined at zero frequency");
  }
  const double magnitude = std::abs(omega);
  const double emission = bath.dissipation * std::pow(magnitude, bath.dimension) *
                          (planck_occupation(magnitude, bath.temperature) + 1.0);
  if (omega > 0.0) return emission;
  return std::exp(-magnitude / bath.temperature) * emission;
}

double thermodynamic_force(double omega, double temperature) {
  require_finite_positive(temperature, "temperature");
  return omega / temperature;
}

CarnotPoint carnot_quantities(double t_hot, double t_cold) {
  require_finite_positive(t_cold, "cold temperature");
  if (!(t_hot > t_cold)) {
    throw std::domain_error("no refrigeration regime: requires T_h > T_c > 0");
  }
  return CarnotPoint{1.0 - t_cold / t_hot, t_cold / (t_hot - t_cold)};
}

double reversible_cold_frequency(double omega_h, double t_hot, double t_cold) {
  require_finite_positive(omega_h, "hot frequency");
  carnot_quantities(t_hot, t_cold);  // validates the temperature ordering
  return omega_h * t_cold / t_hot;
}

}  // namespace qtricycle
