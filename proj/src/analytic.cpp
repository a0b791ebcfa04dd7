#include "qtricycle/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "qtricycle/golden.hpp"

namespace qtricycle::analytic {

double weak_driving_flux(const Bath& hot, const Bath& cold, double omega_h,
                         double omega_c) {
  if (!(omega_c > 0.0) || !(omega_h > omega_c)) {
    throw std::domain_error("flux requires omega_h > omega_c > 0");
  }
  const double hot_emission = relaxation_rate(hot, omega_h);
  const double cold_emission = relaxation_rate(cold, omega_c);
  const double hot_absorption = relaxation_rate(hot, -omega_h);
  const double cold_absorption = relaxation_rate(cold, -omega_c);
  return (hot_emission * cold_absorption - hot_absorption * cold_emission) /
         (hot_emission + cold_emission + 2.0 * (hot_absorption + cold_absorption));
}

double high_temperature_flux(const Bath& hot, const Bath& cold, double omega_h,
                             double omega_c) {
  if (!(omega_c > 0.0) || !(omega_h > omega_c)) {
    throw std::domain_error("flux requires omega_h > omega_c > 0");
  }
  const double force_gap = omega_h / hot.temperature - omega_c / cold.temperature;
  const double cold_spectral = std::pow(omega_c, cold.dimension - 1.0);
  const double denominator =
      hot.dissipation + cold_spectral * std::pow(omega_h, 1.0 - hot.dimension) *
                            cold.dissipation * cold.temperature / hot.temperature;
  return (hot.dissipation * cold.dissipation / 3.0) * cold.temperature * cold_spectral *
         force_gap / denominator;
}

double asymmetric_flux(const Bath& cold, double x_h, double x_c) {
  if (!(x_h > 0.0) || !(x_c > 0.0)) {
    throw std::domain_error("forces must be positive");
  }
  const double prefactor =
      cold.dissipation * std::pow(cold.temperature, cold.dimension) / 3.0;
  return prefactor *
         (std::pow(x_c, cold.dimension - 1.0) * x_h - std::pow(x_c, cold.dimension));
}

double cop_from_forces(double x_h, double x_c, double carnot_cop) {
  if (!(x_h > 0.0) || !(x_c > 0.0) || !(carnot_cop > 0.0)) {
    throw std::domain_error("forces and Carnot COP must be positive");
  }
  const double denominator = (carnot_cop + 1.0) / carnot_cop * (x_h / x_c) - 1.0;
  if (!(denominator > 0.0)) {
    throw std::domain_error("COP undefined: forces outside the refrigeration regime");
  }
  return 1.0 / denominator;
}

double cop_from_frequencies(double omega_h, double omega_c) {
  if (!(omega_c > 0.0) || !(omega_h > omega_c)) {
    throw std::domain_error("COP requires omega_h > omega_c > 0");
  }
  return omega_c / (omega_h - omega_c);
}

double optimal_cop_from_coefficient(double coefficient, double carnot_cop) {
  if (!(coefficient >= 0.0) || !(coefficient <= 1.0)) {
    throw std::domain_error("cold-force coefficient must lie in [0, 1]");
  }
  if (!(carnot_cop > 0.0)) throw std::domain_error("Carnot COP must be positive");
  return coefficient / ((1.0 - coefficient) * carnot_cop + 1.0);
}

double benchmark_cop(double dimension, double carnot_cop) {
  if (!(dimension >= 1.0)) throw std::domain_error("dimension must be >= 1");
  if (!(carnot_cop >= 0.0)) throw std::domain_error("Carnot COP must be >= 0");
  return dimension / (dimension + 1.0 + carnot_cop);
}

double ynca_efficiency(double carnot_efficiency) {
  if (!(carnot_efficiency >= 0.0) || !(carnot_efficiency < 1.0)) {
    throw std::domain_error("Carnot efficiency must lie in [0, 1)");
  }
  return 1.0 - std::sqrt(1.0 - carnot_efficiency);
}

double chi_optimal_cop(double carnot_cop) {
  if (!(carnot_cop >= 0.0)) throw std::domain_error("Carnot COP must be >= 0");
  return std::sqrt(1.0 + carnot_cop) - 1.0;
}

OnsagerParams OnsagerParams::from_coupling(double q) {
  if (!(q >= -1.0) || !(q <= 1.0)) {
    throw std::domain_error("flux coupling q must lie in [-1, 1]");
  }
  return OnsagerParams{q, std::nullopt};
}

OnsagerParams OnsagerParams::from_coefficients(double l11, double l12, double l21,
                                               double l22) {
  if (!(l11 >= 0.0) || !(l22 >= 0.0)) {
    throw std::domain_error("diagonal kinetic coefficients must be non-negative");
  }
  if (l12 != l21) {
    throw std::domain_error("kinetic coefficients must be symmetric (L12 = L21)");
  }
  const double q = l12 / std::sqrt(l11 * l22);
  if (!(q * q <= 1.0)) {
    throw std::domain_error("kinetic coefficients violate q^2 <= 1");
  }
  return OnsagerParams{q, Coefficients{l11, l12, l21, l22}};
}

double onsager_optimal_cop(const OnsagerParams& params, double carnot_cop) {
  const double q2 = params.coupling * params.coupling;
  if (!(q2 <= 1.0)) throw std::domain_error("flux coupling violates q^2 <= 1");
  if (!(carnot_cop > 0.0)) throw std::domain_error("Carnot COP must be positive");
  return q2 * carnot_cop / ((4.0 - 3.0 * q2) * carnot_cop + (4.0 - 2.0 * q2));
}

std::optional<double> onsager_optimal_cold_force(const OnsagerParams& params, double x_h) {
  if (!params.coefficients) return std::nullopt;
  return -params.coefficients->l21 * x_h / (2.0 * params.coefficients->l22);
}

ForceFlux weak_driving_force_flux(const Bath& hot, const Bath& cold) {
  return [hot, cold](double x_h, double x_c) {
    return weak_driving_flux(hot, cold, x_h * hot.temperature, x_c * cold.temperature);
  };
}

ForceFlux high_temperature_force_flux(const Bath& hot, const Bath& cold) {
  return [hot, cold](double x_h, double x_c) {
    return high_temperature_flux(hot, cold, x_h * hot.temperature,
                                 x_c * cold.temperature);
  };
}

ForceFlux asymmetric_force_flux(const Bath& cold) {
  return [cold](double x_h, double x_c) { return asymmetric_flux(cold, x_h, x_c); };
}

std::vector<double> default_force_schedule() {
  return {0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
}

CoefficientEstimate estimate_cold_force_coefficient(const ForceFlux& flux,
                                                    const std::vector<double>& xh_schedule,
                                                    double accept_tol) {
  if (xh_schedule.size() < 2) {
    throw std::domain_error("force schedule needs at least two entries");
  }
  for (std::size_t i = 1; i < xh_schedule.size(); ++i) {
    if (!(xh_schedule[i] < xh_schedule[i - 1]) || !(xh_schedule[i] > 0.0)) {
      throw std::domain_error("force schedule must be positive and strictly decreasing");
    }
  }

  CoefficientEstimate estimate;
  std::vector<double> first_order;   // leading force term eliminated
  std::vector<double> second_order;  // quadratic term eliminated as well

  auto maximizer_ratio = [&](double x_h) {
    const auto peak = optim::maximize_on_window(
        [&](double x_c) { return x_c * flux(x_h, x_c); }, 0.0, x_h, 1e-10, 64,
        /*require_positive=*/true);
    if (peak.edge) {
      throw std::runtime_error("no interior cooling-power maximum at scheduled force");
    }
    return peak.position / x_h;
  };

  auto accept = [&](int order, double value, double diff) {
    estimate.value = value;
    estimate.order = order;
    estimate.residual = std::abs(diff);
    estimate.converged = true;
  };

  for (std::size_t k = 0; k < xh_schedule.size() && !estimate.converged; ++k) {
    estimate.ratios.push_back(maximizer_ratio(xh_schedule[k]));
    const auto& r = estimate.ratios;
    if (r.size() >= 2) {
      first_order.push_back(2.0 * r[r.size() - 1] - r[r.size() - 2]);
    }
    if (first_order.size() >= 2) {
      const double diff1 = first_order.back() - first_order[first_order.size() - 2];
      if (std::abs(diff1) < accept_tol) {
        accept(1, first_order.back(), diff1);
        break;
      }
      second_order.push_back(
          (4.0 * first_order.back() - first_order[first_order.size() - 2]) / 3.0);
      if (second_order.size() >= 2) {
        const double diff2 = second_order.back() - second_order[second_order.size() - 2];
        if (std::abs(diff2) < accept_tol) {
          accept(2, second_order.back(), diff2);
          break;
        }
      }
    }
  }

  if (!estimate.converged) {
    // best available estimate with a failure flag
    if (!second_order.empty()) {
      estimate.value = second_order.back();
      estimate.order = 2;
      estimate.residual = second_order.size() >= 2
                              ? std::abs(second_order.back() -
                                         second_order[second_order.size() - 2])
                              : std::abs(second_order.back() - first_order.back());
    } else if (!first_order.empty()) {
      estimate.value = first_order.back();
      estimate.order = 1;
      estimate.residual = std::abs(first_order.back() - estimate.ratios.back());
    } else {
      estimate.value = estimate.ratios.back();
      estimate.order = 0;
      estimate.residual = std::abs(estimate.value);
    }
  }

  if (estimate.value < -1e-6 || estimate.value > 1.0 + 1e-6) {
    throw std::runtime_error("cold-force coefficient estimate escaped [0, 1]");
  }
  estimate.value = std::min(std::max(estimate.value, 0.0), 1.0);
  return estimate;
}

}  // namespace qtricycle::analytic
