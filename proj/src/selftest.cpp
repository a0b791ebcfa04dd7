#include "qtricycle/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtricycle/analytic.hpp"
#include "qtricycle/csv.hpp"
#include "qtricycle/maser.hpp"
#include "qtricycle/optimize.hpp"
#include "qtricycle/rng.hpp"
#include "qtricycle/sweep.hpp"

namespace qtricycle::selftest {

namespace {

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

/// Configuration sampler for the tight cross-route identities. Bounding the
/// force gap and the hot/cold rate asymmetry keeps the cancellation depth of
/// the flux far above double rounding, where a 1e-12-level comparison is
/// meaningful.
maser::MaserConfig conditioned_config(SplitMix64& rng, bool driven) {
  const double t_hot = rng.log_uniform(0.5, 20.0);
  const double t_cold = t_hot * rng.log_uniform(0.1, 0.8);
  const double x_h = rng.log_uniform(0.2, 0.5);
  const double omega_h = x_h * t_hot;
  const double x_c = x_h * rng.log_uniform(0.05, 0.5);
  const double omega_c = x_c * t_cold;

  const double gamma_hot = t_hot * rng.log_uniform(1e-5, 1e-2);
  Bath hot(t_hot, gamma_hot, 3.0, BathLabel::Hot);

  // place the total cold emission rate within a decade of the hot one
  const double target_ratio = rng.log_uniform(0.1, 10.0);
  const double hot_emission = relaxation_rate(hot, omega_h);
  const double cold_unit_emission =
      std::pow(omega_c, 3.0) * (planck_occupation(omega_c, t_cold) + 1.0);
  const double gamma_cold = target_ratio * hot_emission / cold_unit_emission;
  Bath cold(t_cold, gamma_cold, 3.0, BathLabel::Cold);

  const double lambda = driven ? omega_c * rng.log_uniform(1e-4, 0.3) : 0.0;
  return maser::MaserConfig(omega_h, omega_c, lambda, hot, cold);
}

Check make_check(std::string name, double worst, double tolerance) {
  return Check{std::move(name), worst, tolerance, worst <= tolerance};
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& check) { return check.passed; });
}

std::string Report::text() const {
  std::ostringstream out;
  for (const Check& check : checks) {
    out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name
        << " worst=" << format_double(check.worst_residual)
        << " tol=" << format_double(check.tolerance) << "\n";
  }
  return out.str();
}

double detailed_balance_worst_residual(
    const std::function<double(const Bath&, double)>& rate, int samples,
    std::uint64_t seed) {
  SplitMix64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double temperature = rng.log_uniform(0.1, 50.0);
    const double dimension = 1.0 + static_cast<double>(rng.next() % 3);
    Bath bath(temperature, temperature * rng.log_uniform(1e-5, 1e-2), dimension);
    const double omega = temperature * rng.log_uniform(1e-3, 10.0);
    const double emission = rate(bath, omega);
    const double absorption = rate(bath, -omega);
    worst = std::max(worst,
                     std::abs(absorption - std::exp(-omega / temperature) * emission) /
                         emission);
  }
  return worst;
}

Report run(int samples, std::uint64_t seed) {
  Report report;

  report.checks.push_back(make_check(
      "detailed-balance (KMS) of the relaxation rates",
      detailed_balance_worst_residual(
          [](const Bath& bath, double omega) { return relaxation_rate(bath, omega); },
          samples, substream_seed(seed, 1)),
      1e-12));

  {  // population-matrix route against the Liouvillian null space
    SplitMix64 rng(substream_seed(seed, 2));
    double worst_population = 0.0;
    double worst_current = 0.0;
    for (int i = 0; i < samples; ++i) {
      const maser::MaserConfig config = conditioned_config(rng, /*driven=*/true);
      const maser::LimitCycle cycle = maser::solve_limit_cycle(config);
      const maser::DensityMatrix steady = maser::liouvillian_steady_state(config);
      worst_population = std::max(
          {worst_population, std::abs(cycle.n1 - steady(0, 0).real()),
           std::abs(cycle.n2 - steady(1, 1).real()),
           std::abs(cycle.n3 - steady(2, 2).real()),
           std::abs(cycle.coherence - 2.0 * steady(1, 2).real())});

      const maser::CurrentsReport currents = maser::heat_currents(config, cycle);
      worst_current = std::max(
          {worst_current,
           relative_gap(currents.hot_current,
                        maser::heat_current_general(config, steady, BathLabel::Hot)),
           relative_gap(currents.cold_current,
                        maser::heat_current_general(config, steady, BathLabel::Cold))});
    }
    report.checks.push_back(make_check(
        "limit-cycle state: matrix route vs Liouvillian null space", worst_population,
        1e-9));
    report.checks.push_back(make_check(
        "heat currents: explicit route vs weighted traces", worst_current, 1e-10));
  }

  {  // undriven solver against the closed-form flux
    SplitMix64 rng(substream_seed(seed, 3));
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const maser::MaserConfig config = conditioned_config(rng, /*driven=*/false);
      const maser::CurrentsReport currents =
          maser::heat_currents(config, maser::solve_limit_cycle(config));
      const double closed_form = analytic::weak_driving_flux(
          config.hot, config.cold, config.omega_h, config.omega_c);
      worst = std::max(worst, relative_gap(currents.flux, closed_form));
    }
    report.checks.push_back(
        make_check("undriven limit-cycle flux vs closed form", worst, 1e-12));
  }

  {  // asymmetric-model optimum against its closed-form maximizer
    double worst = 0.0;
    for (double dimension : {1.0, 2.0, 3.0}) {
      for (double carnot_cop : {0.1, 1.0, 5.0}) {
        const double t_hot = 2.0;
        const double t_cold = t_hot * carnot_cop / (carnot_cop + 1.0);
        Bath hot(t_hot, 1e-3 * t_hot, dimension, BathLabel::Hot);
        Bath cold(t_cold, 1e-3 * t_cold, dimension, BathLabel::Cold);
        const optim::OptimumReport optimum = optim::optimize_analytic(
            hot, cold, 0.1 * t_hot, optim::FluxModel::Asymmetric);
        worst = std::max(worst, std::abs(optimum.cop_normalized -
                                         analytic::benchmark_cop(dimension, carnot_cop)));
      }
    }
    report.checks.push_back(
        make_check("asymmetric-model optimum vs closed-form benchmark", worst, 1e-6));
  }

  {  // thermodynamic laws over the production sampling distribution
    sweep::Spec spec;
    double worst_first_law = 0.0;
    double most_negative_entropy = 0.0;
    for (int i = 0; i < samples; ++i) {
      const maser::MaserConfig config = sweep::sample_configuration(seed, i, spec);
      const maser::CurrentsReport currents =
          maser::heat_currents(config, maser::solve_limit_cycle(config));
      const double scale = std::max({std::abs(currents.hot_current),
                                     std::abs(currents.cold_current),
                                     std::abs(currents.power)});
      if (scale > 0.0) {
        worst_first_law = std::max(
            worst_first_law,
            std::abs(currents.hot_current + currents.cold_current + currents.power) /
                scale);
      }
      most_negative_entropy =
          std::min(most_negative_entropy, currents.entropy_production);
    }
    report.checks.push_back(make_check("first law residual", worst_first_law, 1e-10));
    report.checks.push_back(
        make_check("entropy production non-negative", -most_negative_entropy, 1e-12));
  }

  return report;
}

}  // namespace qtricycle::selftest
