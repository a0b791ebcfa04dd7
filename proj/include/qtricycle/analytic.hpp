#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qtricycle/core.hpp"

namespace qtricycle::analytic {

/// Stationary quanta flux of the weakly driven machine, exact in the bath
/// rates: (G_h G_-c - G_-h G_c) / (G_h + G_c + 2(G_-h + G_-c)) with
/// G_{+/-alpha} = relaxation_rate(bath_alpha, +/-omega_alpha).
double weak_driving_flux(const Bath& hot, const Bath& cold, double omega_h,
                         double omega_c);

/// High-temperature (x_alpha -> 0) form of the same flux.
double high_temperature_flux(const Bath& hot, const Bath& cold, double omega_h,
                             double omega_c);

/// High-temperature flux with the heat-rejection contact much stronger than
/// the cold one (gamma_c << gamma_h): I0 (x_c^{d-1} x_h - x_c^d) with
/// I0 = gamma_c T_c^d / 3. Only cold-bath parameters survive.
double asymmetric_flux(const Bath& cold, double x_h, double x_c);

/// COP of an ideal (single-flux) refrigerator from the thermodynamic
/// forces: 1 / ((eps_C + 1)/eps_C * x_h/x_c - 1).
double cop_from_forces(double x_h, double x_c, double carnot_cop);

/// The same COP in frequency form, omega_c / (omega_h - omega_c). The two
/// expressions must agree identically; keeping both guards convention drift.
double cop_from_frequencies(double omega_h, double omega_c);

/// Optimal COP over eps_C given the cold-force coefficient C in
/// x_c,* = C x_h: returns eps*/eps_C = C / ((1 - C) eps_C + 1).
double optimal_cop_from_coefficient(double coefficient, double carnot_cop);

/// Closed-form benchmark for unstructured bosonic baths in d dimensions:
/// eps*/eps_C = d / (d + 1 + eps_C).
double benchmark_cop(double dimension, double carnot_cop);

/// Efficiency at maximum power of an endoreversible engine,
/// 1 - sqrt(1 - eta_C) (Yvon-Novikov-Curzon-Ahlborn).
double ynca_efficiency(double carnot_efficiency);

/// Optimal COP under the chi = eps * Q_c criterion: sqrt(1 + eps_C) - 1.
double chi_optimal_cop(double carnot_cop);

/// Linear-response (Onsager) description of the two coupled fluxes.
struct OnsagerParams {
  double coupling;  // q in [-1, 1], |q| -> 1 means tight flux coupling

  struct Coefficients {
    double l11, l12, l21, l22;
  };
  std::optional<Coefficients> coefficients;

  static OnsagerParams from_coupling(double q);
  static OnsagerParams from_coefficients(double l11, double l12, double l21, double l22);
};

/// Optimal COP in the linear regime:
/// q^2 eps_C / ((4 - 3 q^2) eps_C + (4 - 2 q^2)).
double onsager_optimal_cop(const OnsagerParams& params, double carnot_cop);

/// Maximizing cold force -L21 x_h / (2 L22); requires the full coefficients.
std::optional<double> onsager_optimal_cold_force(const OnsagerParams& params, double x_h);

/// Flux as a function of the two thermodynamic forces.
using ForceFlux = std::function<double(double x_h, double x_c)>;

/// Adapters binding the flux formulas above to fixed baths.
ForceFlux weak_driving_force_flux(const Bath& hot, const Bath& cold);
ForceFlux high_temperature_force_flux(const Bath& hot, const Bath& cold);
ForceFlux asymmetric_force_flux(const Bath& cold);

struct CoefficientEstimate {
  double value = 0.0;          // C, the x_h -> 0 limit of x_c,*/x_h
  int order = 0;               // Richardson order accepted (1 or 2)
  double residual = 0.0;       // last successive-estimate difference
  bool converged = false;
  std::vector<double> ratios;  // raw x_c,*/x_h along the schedule
};

std::vector<double> default_force_schedule();

/// Numerical realization of the small-force expansion: maximize the cooling
/// power x_c * flux over x_c at each scheduled x_h, then Richardson-
/// extrapolate the maximizer ratio x_c,*/x_h to x_h -> 0 (schedule ratio 2,
/// order 1 then 2, accepted once successive estimates differ by less than
/// accept_tol). Throws if some scheduled force has no interior maximum.
CoefficientEstimate estimate_cold_force_coefficient(
    const ForceFlux& flux,
    const std::vector<double>& xh_schedule = default_force_schedule(),
    double accept_tol = 1e-4);

}  // namespace qtricycle::analytic
