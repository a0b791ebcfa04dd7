#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qtricycle/core.hpp"
#include "qtricycle/maser.hpp"
#include "qtricycle/optimize.hpp"

namespace qtricycle::sweep {

struct Range {
  double lo;
  double hi;
};

enum class LambdaMode {
  Zero,         // undriven algebraic limit
  WindowRatio,  // lambda = lambda_ratio * (omega_c,rev / 2)
};

/// Randomized sweep over machine parameters. Temperatures, dissipation
/// strengths and the hot frequency are drawn log-uniformly; the cold
/// frequency is drawn log-uniformly inside the refrigeration window and
/// acts as the free starting point that the optimizer overrides.
struct Spec {
  int samples = 0;
  std::uint64_t seed = 0;
  double dimension = 3.0;

  Range t_hot{0.5, 50.0};            // absolute
  Range t_cold{0.1, 49.5};           // absolute, additionally capped below T_h
  double cold_cap_ratio = 0.99;      // T_c <= cold_cap_ratio * T_h
  Range gamma_over_t{1e-5, 1e-2};    // gamma_alpha / T_alpha, per bath
  Range omega_h_over_t{1e-3, 0.5};   // omega_h / T_h

  LambdaMode lambda_mode = LambdaMode::WindowRatio;
  double lambda_ratio = 1e-3;

  // validity filter thresholds for benchmark comparisons
  double max_hot_force = 0.1;        // x_h = omega_h / T_h
  double max_gamma_ratio = 1e-2;     // gamma_c / gamma_h

  double optimizer_tol = 1e-9;
};

struct Record {
  int index = 0;
  double t_hot = 0.0, t_cold = 0.0;
  double gamma_hot = 0.0, gamma_cold = 0.0;
  double omega_h = 0.0, lambda = 0.0;
  double dimension = 0.0;
  double carnot_cop = 0.0;
  double omega_c_opt = 0.0;
  double cop = 0.0;
  double cop_normalized = 0.0;
  double benchmark = 0.0;    // d / (d + 1 + eps_C)
  double excess = 0.0;       // cop_normalized - benchmark
  bool hot_force_ok = false;
  bool gamma_ratio_ok = false;
  std::string error;         // empty on success

  bool ok() const { return error.empty(); }
  bool valid() const { return hot_force_ok && gamma_ratio_ok; }
};

struct Summary {
  int count = 0;
  int failures = 0;
  int valid_count = 0;
  double max_excess = 0.0;
  double max_excess_valid = 0.0;
  double mean_abs_excess_valid = 0.0;
};

struct Result {
  std::vector<Record> records;
  Summary summary;
};

/// Deterministic draw for one sample: the pair (seed, index) fully fixes
/// the configuration through its own RNG substream.
maser::MaserConfig sample_configuration(std::uint64_t seed, int index, const Spec& spec);

/// Run the sweep; per-sample failures are recorded in the row, never
/// aborting the run. With jobs > 1 samples execute in parallel; the
/// output is identical to the sequential run.
Result run(const Spec& spec, int jobs = 1);

Summary summarize(const std::vector<Record>& records);

/// Benchmark curve (eps_C, d/(d+1+eps_C)) on the given grid.
std::vector<std::pair<double, double>> emit_curve(double dimension,
                                                  const std::vector<double>& carnot_grid);

void write_records_csv(std::ostream& out, const std::vector<Record>& records);
void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows);
std::string summary_text(const Summary& summary);

/// Validity flags recomputed from a row's own parameters; must agree with
/// the stored flags.
bool recompute_hot_force_ok(const Record& record, const Spec& spec);
bool recompute_gamma_ratio_ok(const Record& record, const Spec& spec);

}  // namespace qtricycle::sweep
