#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtricycle/analytic.hpp"
#include "qtricycle/csv.hpp"
#include "qtricycle/maser.hpp"
#include "qtricycle/optimize.hpp"
#include "qtricycle/selftest.hpp"
#include "qtricycle/sweep.hpp"

using namespace qtricycle;

namespace {

struct MachineFlags {
  double omega_h = 0.0;
  double omega_c = 0.0;
  double lambda = 0.0;
  double t_hot = 0.0;
  double t_cold = 0.0;
  double gamma_hot = 0.0;
  double gamma_cold = 0.0;
  double dimension = 3.0;
};

void add_bath_flags(CLI::App* cmd, MachineFlags& flags, bool with_omega_c) {
  cmd->add_option("--omega-h", flags.omega_h, "hot filter frequency")->required();
  if (with_omega_c) {
    cmd->add_option("--omega-c", flags.omega_c, "cold filter frequency")->required();
  }
  cmd->add_option("--lambda", flags.lambda, "driving amplitude");
  cmd->add_option("--th", flags.t_hot, "hot bath temperature")->required();
  cmd->add_option("--tc", flags.t_cold, "cold bath temperature")->required();
  cmd->add_option("--gamma-h", flags.gamma_hot, "hot bath dissipation strength")->required();
  cmd->add_option("--gamma-c", flags.gamma_cold, "cold bath dissipation strength")->required();
  cmd->add_option("--d", flags.dimension, "bath dimensionality");
}

void warn_if_strongly_coupled(const Bath& bath) {
  if (!bath.weakly_coupled()) {
    std::cerr << "warning: " << to_string(bath.label)
              << " bath has gamma/T = " << format_double(bath.dissipation / bath.temperature)
              << "; the weak-coupling master equation assumes gamma/T < "
              << format_double(kWeakCouplingRatio) << "\n";
  }
}

std::pair<Bath, Bath> make_baths(const MachineFlags& flags) {
  Bath hot(flags.t_hot, flags.gamma_hot, flags.dimension, BathLabel::Hot);
  Bath cold(flags.t_cold, flags.gamma_cold, flags.dimension, BathLabel::Cold);
  warn_if_strongly_coupled(hot);
  warn_if_strongly_coupled(cold);
  return {hot, cold};
}

void print_kv(const char* key, double value) {
  std::cout << key << "=" << format_double(value) << "\n";
}

int run_solve(const MachineFlags& flags, const std::string& csv_path) {
  auto [hot, cold] = make_baths(flags);
  maser::MaserConfig config(flags.omega_h, flags.omega_c, flags.lambda, hot, cold);
  const auto cycle = maser::solve_limit_cycle(config);
  const auto currents = maser::heat_currents(config, cycle);

  print_kv("n1", cycle.n1);
  print_kv("n2", cycle.n2);
  print_kv("n3", cycle.n3);
  print_kv("coherence", cycle.coherence);
  print_kv("residual", cycle.residual);
  print_kv("hot_current", currents.hot_current);
  print_kv("cold_current", currents.cold_current);
  print_kv("power", currents.power);
  print_kv("flux", currents.flux);
  print_kv("cop", currents.cop.value_or(std::nan("")));
  print_kv("entropy_production", currents.entropy_production);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << csv_path << "\n";
      return 1;
    }
    write_csv_row(out, {"omega_h", "omega_c", "lambda", "t_hot", "t_cold", "gamma_hot",
                        "gamma_cold", "dimension", "n1", "n2", "n3", "coherence",
                        "residual", "hot_current", "cold_current", "power", "flux",
                        "cop", "entropy_production"});
    write_csv_row(out, {format_double(flags.omega_h), format_double(flags.omega_c),
                        format_double(flags.lambda), format_double(flags.t_hot),
                        format_double(flags.t_cold), format_double(flags.gamma_hot),
                        format_double(flags.gamma_cold), format_double(flags.dimension),
                        format_double(cycle.n1), format_double(cycle.n2),
                        format_double(cycle.n3), format_double(cycle.coherence),
                        format_double(cycle.residual), format_double(currents.hot_current),
                        format_double(currents.cold_current), format_double(currents.power),
                        format_double(currents.flux),
                        format_double(currents.cop.value_or(std::nan(""))),
                        format_double(currents.entropy_production)});
  }
  return 0;
}

int run_optimize(const MachineFlags& flags, double tol) {
  auto [hot, cold] = make_baths(flags);
  const double window = reversible_cold_frequency(flags.omega_h, flags.t_hot, flags.t_cold);
  // any admissible starting omega_c works; the optimizer treats it as free
  const double start = std::max(window / 2.0, flags.lambda * (1.0 + 1e-3));
  maser::MaserConfig prototype(flags.omega_h, start, flags.lambda, hot, cold);
  const auto report = optim::optimize_maser(prototype, tol);

  print_kv("omega_c_opt", report.omega_c);
  print_kv("cold_force", report.cold_force);
  print_kv("cooling_rate", report.cooling_rate);
  print_kv("cop", report.cop);
  print_kv("cop_normalized", report.cop_normalized);
  print_kv("carnot_cop", carnot_quantities(flags.t_hot, flags.t_cold).cop);
  print_kv("window_low", report.bracket_low);
  print_kv("window_high", report.bracket_high);
  print_kv("stationarity", report.stationarity);
  std::cout << "evaluations=" << report.evaluations << "\n";
  std::cout << "converged=" << (report.converged ? 1 : 0) << "\n";
  std::cout << "edge_warning=" << (report.edge_warning ? 1 : 0) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit cycle, heat currents and optimal cooling performance of a "
               "driven three-level quantum refrigerator (units: hbar = k_B = 1)"};
  app.set_config("--config", "", "read key = value lines mirroring the flags");
  app.require_subcommand(1);

  // solve
  MachineFlags solve_flags;
  std::string solve_csv;
  auto* solve_cmd = app.add_subcommand("solve", "solve the limit cycle at fixed frequencies");
  add_bath_flags(solve_cmd, solve_flags, /*with_omega_c=*/true);
  solve_cmd->add_option("--csv", solve_csv, "also write one CSV row to this file");

  // optimize
  MachineFlags optimize_flags;
  double tol = 1e-9;
  auto* optimize_cmd =
      app.add_subcommand("optimize", "maximize the cooling rate over omega_c");
  add_bath_flags(optimize_cmd, optimize_flags, /*with_omega_c=*/false);
  optimize_cmd->add_option("--tol", tol, "relative tolerance on omega_c");

  // sweep
  sweep::Spec spec;
  std::string out_path;
  int jobs = 1;
  std::string lambda_mode = "ratio";
  auto* sweep_cmd = app.add_subcommand("sweep", "randomized parameter sweep with "
                                                "per-sample cooling-rate optimization");
  sweep_cmd->add_option("--samples", spec.samples, "number of samples")->required();
  sweep_cmd->add_option("--seed", spec.seed, "sweep seed");
  sweep_cmd->add_option("--d", spec.dimension, "bath dimensionality");
  sweep_cmd->add_option("--th-lo", spec.t_hot.lo, "hot temperature range low");
  sweep_cmd->add_option("--th-hi", spec.t_hot.hi, "hot temperature range high");
  sweep_cmd->add_option("--tc-lo", spec.t_cold.lo, "cold temperature range low");
  sweep_cmd->add_option("--tc-hi", spec.t_cold.hi, "cold temperature range high");
  sweep_cmd->add_option("--gamma-lo", spec.gamma_over_t.lo, "gamma/T range low");
  sweep_cmd->add_option("--gamma-hi", spec.gamma_over_t.hi, "gamma/T range high");
  sweep_cmd->add_option("--omega-h-lo", spec.omega_h_over_t.lo, "omega_h/T_h range low");
  sweep_cmd->add_option("--omega-h-hi", spec.omega_h_over_t.hi, "omega_h/T_h range high");
  sweep_cmd->add_option("--lambda-mode", lambda_mode, "zero | ratio");
  sweep_cmd->add_option("--lambda-ratio", spec.lambda_ratio,
                        "lambda as a fraction of the half window");
  sweep_cmd->add_option("--max-xh", spec.max_hot_force, "validity filter on x_h");
  sweep_cmd->add_option("--max-gamma-ratio", spec.max_gamma_ratio,
                        "validity filter on gamma_c/gamma_h");
  sweep_cmd->add_option("--tol", spec.optimizer_tol, "per-sample optimizer tolerance");
  sweep_cmd->add_option("--out", out_path, "records CSV file")->required();
  sweep_cmd->add_option("--jobs", jobs, "parallel workers (output is order-independent)");

  // curve
  double curve_dimension = 3.0;
  double eps_c_min = 1e-2, eps_c_max = 1e2;
  int points = 100;
  auto* curve_cmd = app.add_subcommand("curve", "benchmark curve d/(d+1+eps_C) as CSV");
  curve_cmd->add_option("--d", curve_dimension, "bath dimensionality");
  curve_cmd->add_option("--eps-c-min", eps_c_min, "smallest Carnot COP")->required();
  curve_cmd->add_option("--eps-c-max", eps_c_max, "largest Carnot COP")->required();
  curve_cmd->add_option("--points", points, "grid size");

  // selftest
  int selftest_samples = 300;
  auto* selftest_cmd =
      app.add_subcommand("selftest", "run the cross-route consistency suite");
  selftest_cmd->add_option("--samples", selftest_samples, "configurations per check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(solve_flags, solve_csv);

    if (optimize_cmd->parsed()) return run_optimize(optimize_flags, tol);

    if (sweep_cmd->parsed()) {
      if (lambda_mode == "zero") {
        spec.lambda_mode = sweep::LambdaMode::Zero;
      } else if (lambda_mode == "ratio") {
        spec.lambda_mode = sweep::LambdaMode::WindowRatio;
      } else {
        std::cerr << "error: --lambda-mode must be 'zero' or 'ratio'\n";
        return 1;
      }
      const auto result = sweep::run(spec, jobs);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 1;
      }
      sweep::write_records_csv(out, result.records);
      std::cout << sweep::summary_text(result.summary);
      return 0;
    }

    if (curve_cmd->parsed()) {
      if (points < 1 || eps_c_min < 0.0 || eps_c_max < eps_c_min) {
        std::cerr << "error: need 0 <= eps-c-min <= eps-c-max and points >= 1\n";
        return 1;
      }
      std::vector<double> grid;
      grid.reserve(static_cast<std::size_t>(points));
      if (points == 1) {
        grid.push_back(eps_c_min);
      } else if (eps_c_min > 0.0) {
        // log spacing matches how the benchmark is usually displayed
        for (int i = 0; i < points; ++i) {
          grid.push_back(eps_c_min *
                         std::pow(eps_c_max / eps_c_min, i / (points - 1.0)));
        }
      } else {
        for (int i = 0; i < points; ++i) {
          grid.push_back(eps_c_min + (eps_c_max - eps_c_min) * i / (points - 1.0));
        }
      }
      sweep::write_curve_csv(std::cout, sweep::emit_curve(curve_dimension, grid));
      return 0;
    }

    if (selftest_cmd->parsed()) {
      const auto report = selftest::run(selftest_samples);
      std::cout << report.text();
      return report.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
