#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qtricycle/analytic.hpp"
#include "qtricycle/rng.hpp"

using namespace qtricycle;
namespace an = qtricycle::analytic;

TEST_CASE("weak-driving flux vanishes at matched forces and carries the right sign") {
  Bath hot(2.0, 2e-3, 3.0, BathLabel::Hot);
  Bath cold(1.0, 1e-3, 3.0, BathLabel::Cold);
  // binary-exact force match: x_h = x_c = 0.25
  CHECK(an::weak_driving_flux(hot, cold, 0.5, 0.25) == 0.0);
  CHECK(an::weak_driving_flux(hot, cold, 0.5, 0.2) > 0.0);   // x_c < x_h: cooling
  CHECK(an::weak_driving_flux(hot, cold, 0.5, 0.3) < 0.0);   // x_c > x_h: reversed
  CHECK_THROWS_AS(an::weak_driving_flux(hot, cold, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(an::weak_driving_flux(hot, cold, 0.5, 0.0), std::domain_error);
}

TEST_CASE("high-temperature flux converges to the exact one at first order") {
  Bath hot(1.0, 1e-4, 3.0, BathLabel::Hot);
  Bath cold(0.5, 1e-5, 3.0, BathLabel::Cold);
  // halve the forces repeatedly; the relative deviation must shrink
  // roughly linearly (first order in x)
  double previous = 1e300;
  for (double x_h : {8e-3, 4e-3, 2e-3, 1e-3}) {
    const double omega_h = x_h * hot.temperature;
    const double omega_c = 0.5 * x_h * cold.temperature;
    const double exact = an::weak_driving_flux(hot, cold, omega_h, omega_c);
    const double approx = an::high_temperature_flux(hot, cold, omega_h, omega_c);
    const double deviation = std::abs(approx / exact - 1.0);
    CHECK(deviation < 0.7 * previous);  // at least first-order shrinkage
    previous = deviation;
  }
  CHECK(previous < 2e-3);

  // vanishes at matched forces
  CHECK(an::high_temperature_flux(hot, cold, 0.5, 0.25) == 0.0);
}

TEST_CASE("high-temperature flux approaches the asymmetric form as gamma_c/gamma_h -> 0") {
  Bath hot(1.0, 1e-2, 3.0, BathLabel::Hot);
  const double x_h = 0.01, x_c = 0.006;
  double previous = 1e300;
  for (double ratio : {1e-1, 1e-2, 1e-3}) {
    Bath cold(0.5, ratio * hot.dissipation, 3.0, BathLabel::Cold);
    const double full = an::high_temperature_flux(hot, cold, x_h * hot.temperature,
                                                  x_c * cold.temperature);
    const double asym = an::asymmetric_flux(cold, x_h, x_c);
    const double deviation = std::abs(full / asym - 1.0);
    CHECK(deviation < previous);
    previous = deviation;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("asymmetric flux closed-form arithmetic") {
  Bath cold(1.0, 0.3, 3.0, BathLabel::Cold);
  CHECK(an::asymmetric_flux(cold, 0.1, 0.05) ==
        doctest::Approx(1.25e-5).epsilon(1e-12));
  CHECK(an::asymmetric_flux(cold, 0.1, 0.1) == 0.0);
  CHECK_THROWS_AS(an::asymmetric_flux(cold, 0.0, 0.1), std::domain_error);
}

TEST_CASE("asymmetric cooling power peaks at the d/(d+1) fraction of the hot force") {
  for (double dimension : {1.0, 2.0, 3.0}) {
    Bath cold(1.0, 0.3, dimension, BathLabel::Cold);
    const double x_h = 0.1;
    const double x_star = dimension / (dimension + 1.0) * x_h;
    const double peak = x_star * an::asymmetric_flux(cold, x_h, x_star);
    for (double offset : {-0.01, -0.001, 0.001, 0.01}) {
      const double x = x_star * (1.0 + offset);
      CHECK(x * an::asymmetric_flux(cold, x_h, x) < peak);
    }
  }
}

TEST_CASE("COP force form against frequency form") {
  // eps_C = 1, x_h/x_c = 4  ->  1/(2*4 - 1) = 1/7
  CHECK(an::cop_from_forces(0.4, 0.1, 1.0) == doctest::Approx(1.0 / 7.0).epsilon(1e-14));
  // reversible point: force ratio 1 gives exactly eps_C
  CHECK(an::cop_from_forces(0.3, 0.3, 2.5) == doctest::Approx(2.5).epsilon(1e-14));

  SplitMix64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const double t_hot = rng.log_uniform(0.2, 20.0);
    const double t_cold = t_hot * rng.uniform(0.05, 0.95);
    const double omega_h = t_hot * rng.log_uniform(1e-3, 0.5);
    const double omega_c = omega_h * (t_cold / t_hot) * rng.uniform(0.05, 0.999);
    const double eps_c = carnot_quantities(t_hot, t_cold).cop;
    const double by_force =
        an::cop_from_forces(omega_h / t_hot, omega_c / t_cold, eps_c);
    const double by_frequency = an::cop_from_frequencies(omega_h, omega_c);
    CHECK(std::abs(by_force - by_frequency) <= 1e-12 * by_frequency);
  }
}

TEST_CASE("optimal COP from the cold-force coefficient") {
  CHECK(an::optimal_cop_from_coefficient(1.0, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(an::optimal_cop_from_coefficient(0.0, 0.7) == 0.0);
  CHECK_THROWS_AS(an::optimal_cop_from_coefficient(1.2, 1.0), std::domain_error);
  CHECK_THROWS_AS(an::optimal_cop_from_coefficient(-0.1, 1.0), std::domain_error);

  // C = d/(d+1) reproduces the d/(d+1+eps_C) benchmark identically
  SplitMix64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const double dimension = rng.uniform(1.0, 3.0);
    const double eps_c = rng.log_uniform(1e-3, 1e3);
    const double from_coefficient =
        an::optimal_cop_from_coefficient(dimension / (dimension + 1.0), eps_c);
    const double benchmark = an::benchmark_cop(dimension, eps_c);
    CHECK(std::abs(from_coefficient - benchmark) <= 1e-14 * benchmark);
  }
}

TEST_CASE("benchmark curve values and bounds") {
  CHECK(an::benchmark_cop(3.0, 1.0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(an::benchmark_cop(3.0, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(an::benchmark_cop(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  SplitMix64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const double dimension = rng.uniform(1.0, 3.0);
    const double eps_c = rng.log_uniform(1e-3, 1e3);
    const double value = an::benchmark_cop(dimension, eps_c);
    CHECK(value > 0.0);
    CHECK(value <= dimension / (dimension + 1.0));  // saturation bound
  }
}

TEST_CASE("engine efficiency at maximum power") {
  CHECK(an::ynca_efficiency(0.5) == doctest::Approx(0.2928932188134524).epsilon(1e-14));
  CHECK(an::ynca_efficiency(0.0) == 0.0);
  CHECK_THROWS_AS(an::ynca_efficiency(1.0), std::domain_error);
  SplitMix64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const double eta_c = rng.uniform(0.0, 0.999999);
    CHECK(an::ynca_efficiency(eta_c) <= eta_c);
  }
}

TEST_CASE("optimal COP under the combined cooling criterion") {
  CHECK(an::chi_optimal_cop(3.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(an::chi_optimal_cop(0.0) == 0.0);
  SplitMix64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const double eps_c = rng.log_uniform(1e-6, 1e6);
    CHECK(an::chi_optimal_cop(eps_c) < eps_c);
  }
}

TEST_CASE("linear-regime optimal COP") {
  CHECK(an::onsager_optimal_cop(an::OnsagerParams::from_coupling(1.0), 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(an::onsager_optimal_cop(an::OnsagerParams::from_coupling(0.0), 5.0) == 0.0);
  // tight coupling saturates at q^2/(4-3q^2) = 1 for large eps_C
  CHECK(std::abs(an::onsager_optimal_cop(an::OnsagerParams::from_coupling(1.0), 1e14) -
                 1.0) <= 1e-12);
  CHECK(an::onsager_optimal_cop(an::OnsagerParams::from_coupling(1.0), 1e2) <
        an::onsager_optimal_cop(an::OnsagerParams::from_coupling(1.0), 1e4));

  auto params = an::OnsagerParams::from_coefficients(2.0, -1.0, -1.0, 1.0);
  CHECK(params.coupling == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  auto x_star = an::onsager_optimal_cold_force(params, 0.3);
  REQUIRE(x_star.has_value());
  CHECK(*x_star == doctest::Approx(0.15).epsilon(1e-14));
  CHECK_FALSE(an::onsager_optimal_cold_force(an::OnsagerParams::from_coupling(0.5), 0.3)
                  .has_value());

  CHECK_THROWS_AS(an::OnsagerParams::from_coefficients(1.0, -2.0, -2.0, 1.0),
                  std::domain_error);  // q^2 > 1
  CHECK_THROWS_AS(an::OnsagerParams::from_coefficients(1.0, -1.0, 1.0, 1.0),
                  std::domain_error);  // asymmetric off-diagonals
}

TEST_CASE("cold-force coefficient recovered from the asymmetric flux") {
  for (double dimension : {1.0, 3.0}) {
    Bath cold(1.0, 0.3, dimension, BathLabel::Cold);
    auto estimate = an::estimate_cold_force_coefficient(an::asymmetric_force_flux(cold));
    CHECK(estimate.converged);
    CHECK(std::abs(estimate.value - dimension / (dimension + 1.0)) <= 1e-6);
    CHECK(estimate.residual < 1e-4);
  }
}

TEST_CASE("cold-force coefficient recovered from the exact flux") {
  // strongly asymmetric dissipation, where the d/(d+1) limit is sharp
  Bath hot(10.0, 1e-2, 3.0, BathLabel::Hot);
  Bath cold(5.0, 1e-5, 3.0, BathLabel::Cold);
  auto estimate =
      an::estimate_cold_force_coefficient(an::weak_driving_force_flux(hot, cold));
  CHECK(estimate.converged);
  CHECK(std::abs(estimate.value - 0.75) <= 1e-3);
  CHECK(estimate.value >= 0.0);
  CHECK(estimate.value <= 1.0);
}

TEST_CASE("coefficient estimation rejects fluxes without an interior optimum") {
  // constant flux: cooling power grows monotonically to the window edge
  an::ForceFlux monotone = [](double, double) { return 1.0; };
  CHECK_THROWS_AS(an::estimate_cold_force_coefficient(monotone), std::runtime_error);

  // non-refrigerating flux: no positive cooling power anywhere
  an::ForceFlux reversed = [](double, double) { return -1.0; };
  CHECK_THROWS_AS(an::estimate_cold_force_coefficient(reversed), std::runtime_error);

  // malformed schedules
  an::ForceFlux ok = [](double x_h, double x_c) { return x_h - x_c; };
  CHECK_THROWS_AS(an::estimate_cold_force_coefficient(ok, {0.1}), std::domain_error);
  CHECK_THROWS_AS(an::estimate_cold_force_coefficient(ok, {0.1, 0.2}), std::domain_error);
}
