#pragma once

#include <functional>

#include "qtricycle/core.hpp"
#include "qtricycle/maser.hpp"

namespace qtricycle::optim {

struct Window {
  double low;
  double high;
};

struct OptimumReport {
  double omega_c = 0.0;        // maximizing cold filter frequency
  double cold_force = 0.0;     // x_c,* = omega_c / T_c
  double cooling_rate = 0.0;   // cold heat current at the optimum
  double cop = 0.0;            // eps* at the optimum
  double cop_normalized = 0.0; // eps*/eps_C
  int evaluations = 0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  bool converged = false;
  bool edge_warning = false;   // coarse-grid maximum at the window edge
  double stationarity = 0.0;   // |dQ/domega| * omega / Q at the optimum (NaN at edges)
};

/// Maximize a cooling-rate objective over omega_c on the open window.
/// A coarse global grid precedes golden-section refinement, so unimodality
/// is not assumed. omega_h and the bath temperatures supply the COP at the
/// reported optimum (frequency form). Throws if the objective is
/// non-positive on the whole grid (no refrigeration).
OptimumReport maximize_cooling_rate(const std::function<double(double)>& cooling_rate,
                                    Window window, double rel_tol, double omega_h,
                                    double t_hot, double t_cold, int grid_points = 64);

/// Optimize the full machine: the prototype's omega_c is treated as free,
/// everything else is held fixed. The reported COP is the measured
/// cold_current / power at the optimum, not the frequency form.
OptimumReport optimize_maser(const maser::MaserConfig& prototype, double rel_tol = 1e-9,
                             int grid_points = 64);

enum class FluxModel {
  WeakDriving,      // exact bath rates
  HighTemperature,  // leading order in the forces
  Asymmetric,       // high temperature and gamma_c << gamma_h
};

/// Optimize one of the closed-form flux models, with cooling rate
/// omega_c * flux.
OptimumReport optimize_analytic(const Bath& hot, const Bath& cold, double omega_h,
                                FluxModel model, double rel_tol = 1e-9,
                                int grid_points = 64);

}  // namespace qtricycle::optim
