#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>

#include "qtricycle/core.hpp"

namespace qtricycle::maser {

using DensityMatrix = Eigen::Matrix3cd;

/// Periodically driven three-level machine: levels |1>, |2>, |3> with the
/// |1><->|3| transition filtered to the hot bath at omega_h, |1><->|2| to
/// the cold bath at omega_c, and a classical drive of amplitude lambda on
/// |2><->|3| resonant at omega_w = omega_h - omega_c (the work input port).
struct MaserConfig {
  double omega_h;
  double omega_c;
  double lambda;
  Bath hot;
  Bath cold;

  MaserConfig(double omega_h, double omega_c, double lambda, Bath hot, Bath cold);

  /// Work-port frequency, fixed by resonance; never set independently.
  double omega_w() const { return omega_h - omega_c; }
};

/// The drive splits each thermal contact into two sidebands at
/// omega_alpha +/- lambda. Those four channels are the only open ones.
enum class Sideband { Upper, Lower };

struct Channel {
  BathLabel bath;
  Sideband sideband;
};

constexpr std::array<Channel, 4> all_channels() {
  return {Channel{BathLabel::Hot, Sideband::Upper},
          Channel{BathLabel::Hot, Sideband::Lower},
          Channel{BathLabel::Cold, Sideband::Upper},
          Channel{BathLabel::Cold, Sideband::Lower}};
}

/// Physical frequency omega_alpha +/- lambda at which the channel samples
/// its bath spectrum.
double channel_frequency(const MaserConfig& config, Channel channel);

/// Bohr quasi-frequency omega_c +/- lambda of the averaged Hamiltonian
/// associated with the channel's jump operator.
double channel_bohr_frequency(const MaserConfig& config, Channel channel);

/// Sideband index of the drive: hot-contact channels ride one work quantum
/// (q = 1), cold-contact channels none (q = 0).
int channel_floquet_index(Channel channel);

struct ChannelRates {
  double emission;    // Gamma at +frequency
  double absorption;  // Gamma at -frequency (detailed-balance partner)
};

struct TransitionRates {
  ChannelRates hot_upper;
  ChannelRates hot_lower;
  ChannelRates cold_upper;
  ChannelRates cold_lower;

  // bath-summed sideband rates
  double emission_upper;     // hot + cold emission at the upper sidebands
  double emission_lower;
  double absorption_upper;
  double absorption_lower;

  // half-mean / half-split combinations driving the population dynamics;
  // the splits vanish with the drive (lambda -> 0)
  double emission_mean;      // (emission_upper + emission_lower) / 4
  double emission_split;     // (emission_upper - emission_lower) / 4
  double absorption_mean;
  double absorption_split;
};

TransitionRates transition_rates(const MaserConfig& config);

/// Time-averaged Hamiltonian generating the drive-dressed free evolution:
/// omega_c (|2><2| + |3><3|) + lambda (|2><3| + |3><2|), eigenvalues
/// {0, omega_c - lambda, omega_c + lambda}.
DensityMatrix averaged_hamiltonian(const MaserConfig& config);

/// Population rate matrix of the limit cycle, with the stationary coherence
/// between the driven pair eliminated in favor of the populations. Columns
/// sum to zero (probability conservation).
Eigen::Matrix3d build_coefficient_matrix(const TransitionRates& rates);

struct LimitCycle {
  double n1;
  double n2;
  double n3;
  double coherence;  // n_23 + n_32 at the limit cycle
  double residual;   // max-norm of M*n evaluated on the untouched matrix
};

/// Stationary populations from M*n = 0 with the normalization row swapped
/// in for the last equation; the residual is verified on the full M.
LimitCycle solve_limit_cycle(const MaserConfig& config);

/// Apply one sideband dissipator to rho. The result is Hermitian and
/// traceless for Hermitian input.
DensityMatrix lindblad_apply(const MaserConfig& config, Channel channel,
                             const DensityMatrix& rho);

/// Gibbs-like local fixed point of a single channel: thermal in the
/// averaged Hamiltonian at the effective inverse temperature
/// channel_frequency / (T_alpha * channel_bohr_frequency), as dictated by
/// detailed balance at the channel's physical frequency.
DensityMatrix channel_local_state(const MaserConfig& config, Channel channel);

/// Steady state of the full generator, obtained from the null space of the
/// 9x9 vectorized Liouvillian. Independent of the population-matrix route;
/// the two must agree at every valid configuration.
DensityMatrix liouvillian_steady_state(const MaserConfig& config);

struct CurrentsReport {
  double hot_current;         // positive = heat flowing into the machine
  double cold_current;
  double power;               // drive input, -(hot_current + cold_current)
  double flux;                // cold_current / omega_c, quanta per time
  std::optional<double> cop;  // cold_current / power when both are positive
  double entropy_production;  // -hot/T_h - cold/T_c (work port at T -> inf)
};

/// Cycle-averaged heat currents from the explicit per-sideband expressions
/// in the limit-cycle populations and coherence.
CurrentsReport heat_currents(const MaserConfig& config, const LimitCycle& cycle);

/// Same currents by the weighted-trace route,
///   sum over channels of (w_phys / w_bohr) tr{H_bar L_ch[rho]},
/// usable with any steady state (e.g. the Liouvillian null space).
double heat_current_general(const MaserConfig& config, const DensityMatrix& steady,
                            BathLabel bath);

/// Entropy production rate of the report; throws if it is negative beyond
/// numerical tolerance, which would indicate a solver defect.
double entropy_production(const CurrentsReport& report, double t_hot, double t_cold);

}  // namespace qtricycle::maser
