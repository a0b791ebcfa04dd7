#include "qtricycle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qtricycle/analytic.hpp"
#include "qtricycle/csv.hpp"
#include "qtricycle/rng.hpp"

namespace qtricycle::sweep {

namespace {

void validate(const Spec& spec) {
  auto ordered = [](Range r) { return r.lo > 0.0 && r.lo <= r.hi; };
  if (spec.samples < 0) throw std::domain_error("sample count must be >= 0");
  if (!ordered(spec.t_hot) || !ordered(spec.t_cold) || !ordered(spec.gamma_over_t) ||
      !ordered(spec.omega_h_over_t)) {
    throw std::domain_error("sweep ranges must satisfy 0 < lo <= hi");
  }
  if (!(spec.cold_cap_ratio > 0.0) || !(spec.cold_cap_ratio < 1.0)) {
    throw std::domain_error("cold temperature cap ratio must lie in (0, 1)");
  }
  if (!(spec.lambda_ratio >= 0.0)) throw std::domain_error("lambda ratio must be >= 0");
}

double pick_lambda(const Spec& spec, double window_high) {
  if (spec.lambda_mode == LambdaMode::Zero) return 0.0;
  return spec.lambda_ratio * 0.5 * window_high;
}

}  // namespace

maser::MaserConfig sample_configuration(std::uint64_t seed, int index, const Spec& spec) {
  validate(spec);
  SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(index));

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double t_hot = rng.log_uniform(spec.t_hot.lo, spec.t_hot.hi);
    const double t_cold_cap = std::min(spec.t_cold.hi, spec.cold_cap_ratio * t_hot);
    if (spec.t_cold.lo > t_cold_cap) continue;  // redraw the pair
    const double t_cold = rng.log_uniform(spec.t_cold.lo, t_cold_cap);

    const double gamma_hot = t_hot * rng.log_uniform(spec.gamma_over_t.lo, spec.gamma_over_t.hi);
    const double gamma_cold = t_cold * rng.log_uniform(spec.gamma_over_t.lo, spec.gamma_over_t.hi);
    const double omega_h = t_hot * rng.log_uniform(spec.omega_h_over_t.lo, spec.omega_h_over_t.hi);

    const double window_high = reversible_cold_frequency(omega_h, t_hot, t_cold);
    const double lambda = pick_lambda(spec, window_high);
    const double window_low = std::max(lambda * (1.0 + 1e-6), window_high * 1e-6);
    if (!(window_low < window_high)) continue;
    const double omega_c = rng.log_uniform(window_low, window_high * (1.0 - 1e-9));

    return maser::MaserConfig(omega_h, omega_c, lambda,
                              Bath(t_hot, gamma_hot, spec.dimension, BathLabel::Hot),
                              Bath(t_cold, gamma_cold, spec.dimension, BathLabel::Cold));
  }
  throw std::domain_error("sweep ranges rejected 1000 consecutive draws");
}

Summary summarize(const std::vector<Record>& records) {
  Summary summary;
  summary.count = static_cast<int>(records.size());
  double abs_excess_sum = 0.0;
  bool any = false, any_valid = false;
  for (const Record& record : records) {
    if (!record.ok()) {
      ++summary.failures;
      continue;
    }
    if (!any || record.excess > summary.max_excess) summary.max_excess = record.excess;
    any = true;
    if (record.valid()) {
      if (!any_valid || record.excess > summary.max_excess_valid) {
        summary.max_excess_valid = record.excess;
      }
      any_valid = true;
      ++summary.valid_count;
      abs_excess_sum += std::abs(record.excess);
    }
  }
  if (summary.valid_count > 0) {
    summary.mean_abs_excess_valid = abs_excess_sum / summary.valid_count;
  }
  return summary;
}

Result run(const Spec& spec, int jobs) {
  validate(spec);
  if (jobs < 1) throw std::domain_error("jobs must be >= 1");

  std::vector<Record> records(static_cast<std::size_t>(spec.samples));

  auto work = [&](int index) {
    Record& record = records[static_cast<std::size_t>(index)];
    record.index = index;
    try {
      const maser::MaserConfig config = sample_configuration(spec.seed, index, spec);
      record.t_hot = config.hot.temperature;
      record.t_cold = config.cold.temperature;
      record.gamma_hot = config.hot.dissipation;
      record.gamma_cold = config.cold.dissipation;
      record.omega_h = config.omega_h;
      record.lambda = config.lambda;
      record.dimension = spec.dimension;
      record.carnot_cop = carnot_quantities(record.t_hot, record.t_cold).cop;
      record.hot_force_ok = record.omega_h / record.t_hot <= spec.max_hot_force;
      record.gamma_ratio_ok = record.gamma_cold / record.gamma_hot <= spec.max_gamma_ratio;

      const optim::OptimumReport optimum = optim::optimize_maser(config, spec.optimizer_tol);
      record.omega_c_opt = optimum.omega_c;
      record.cop = optimum.cop;
      record.cop_normalized = optimum.cop_normalized;
      record.benchmark = analytic::benchmark_cop(spec.dimension, record.carnot_cop);
      record.excess = record.cop_normalized - record.benchmark;
    } catch (const std::exception& error) {
      record.error = error.what();
    }
  };

  if (jobs == 1 || spec.samples <= 1) {
    for (int i = 0; i < spec.samples; ++i) work(i);
  } else {
    std::atomic<int> next{0};
    auto drain = [&] {
      for (int i = next.fetch_add(1); i < spec.samples; i = next.fetch_add(1)) work(i);
    };
    std::vector<std::thread> pool;
    const int threads = std::min(jobs, spec.samples);
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(drain);
    for (auto& thread : pool) thread.join();
  }

  Summary summary = summarize(records);
  return Result{std::move(records), summary};
}

std::vector<std::pair<double, double>> emit_curve(double dimension,
                                                  const std::vector<double>& carnot_grid) {
  if (carnot_grid.empty()) throw std::domain_error("benchmark grid must be nonempty");
  std::vector<std::pair<double, double>> rows;
  rows.reserve(carnot_grid.size());
  for (double carnot_cop : carnot_grid) {
    rows.emplace_back(carnot_cop, analytic::benchmark_cop(dimension, carnot_cop));
  }
  return rows;
}

void write_records_csv(std::ostream& out, const std::vector<Record>& records) {
  write_csv_row(out, {"index", "t_hot", "t_cold", "gamma_hot", "gamma_cold", "omega_h",
                      "lambda", "dimension", "carnot_cop", "omega_c_opt", "cop",
                      "cop_normalized", "benchmark", "excess", "hot_force_ok",
                      "gamma_ratio_ok", "error"});
  for (const Record& r : records) {
    write_csv_row(out, {std::to_string(r.index), format_double(r.t_hot),
                        format_double(r.t_cold), format_double(r.gamma_hot),
                        format_double(r.gamma_cold), format_double(r.omega_h),
                        format_double(r.lambda), format_double(r.dimension),
                        format_double(r.carnot_cop), format_double(r.omega_c_opt),
                        format_double(r.cop), format_double(r.cop_normalized),
                        format_double(r.benchmark), format_double(r.excess),
                        r.hot_force_ok ? "1" : "0", r.gamma_ratio_ok ? "1" : "0",
                        r.error});
  }
}

void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows) {
  write_csv_row(out, {"carnot_cop", "benchmark_cop_normalized"});
  for (const auto& [carnot_cop, value] : rows) {
    write_csv_row(out, {format_double(carnot_cop), format_double(value)});
  }
}

std::string summary_text(const Summary& summary) {
  std::ostringstream out;
  out << "samples=" << summary.count << "\n"
      << "failures=" << summary.failures << "\n"
      << "valid=" << summary.valid_count << "\n"
      << "max_excess=" << format_double(summary.max_excess) << "\n"
      << "max_excess_valid=" << format_double(summary.max_excess_valid) << "\n"
      << "mean_abs_excess_valid=" << format_double(summary.mean_abs_excess_valid) << "\n";
  return out.str();
}

bool recompute_hot_force_ok(const Record& record, const Spec& spec) {
  return record.omega_h / record.t_hot <= spec.max_hot_force;
}

bool recompute_gamma_ratio_ok(const Record& record, const Spec& spec) {
  return record.gamma_cold / record.gamma_hot <= spec.max_gamma_ratio;
}

}  // namespace qtricycle::sweep
