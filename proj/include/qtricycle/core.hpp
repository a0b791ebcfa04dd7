#pragma once

#include <stdexcept>

// Upper bound on the bath dimensionality accepted by Bath. Physical
// dimensions are 1, 2 or 3; raise this if you want to explore larger d.
#ifndef QTRICYCLE_MAX_BATH_DIMENSION
#define QTRICYCLE_MAX_BATH_DIMENSION 3
#endif

// Define QTRICYCLE_REAL_DIMENSION to accept non-integer bath dimensions.
// The rate formulas extend continuously in d.

namespace qtricycle {

// Everything below works in natural units, hbar = k_B = 1.

inline constexpr double kWeakCouplingRatio = 1e-2;

enum class BathLabel { Hot, Cold };

const char* to_string(BathLabel label);

/// Bosonic reservoir with flat (unstructured) spectral density in d
/// spatial dimensions: relaxation rates Gamma_w = gamma w^d (N(w)+1).
struct Bath {
  double temperature;   // T > 0, energy units
  double dissipation;   // gamma > 0, overall rate prefactor
  double dimension;     // d, spatial dimensionality
  BathLabel label;

  Bath(double temperature, double dissipation, double dimension = 3.0,
       BathLabel label = BathLabel::Hot);

  /// The Born-Markov derivation assumes gamma << T. Outside this range
  /// results are still returned, but callers should surface a warning.
  bool weakly_coupled() const {
    return dissipation / temperature < kWeakCouplingRatio;
  }
};

/// Dimensionless forces x = omega/T conjugate to the quanta flux.
struct ForcePair {
  double hot;
  double cold;

  ForcePair(double hot, double cold);

  /// Cooling requires the cold force below the hot one.
  bool in_refrigeration_window() const { return cold < hot; }
};

/// Bose-Einstein occupation 1/(exp(omega/T) - 1).
double planck_occupation(double omega, double temperature);

/// Relaxation rate at a signed frequency. Positive frequencies give the
/// emission rate gamma w^d (N(w)+1); negative ones the absorption rate,
/// tied to emission by detailed balance (KMS), exp(-|w|/T) Gamma_|w|.
/// The zero-frequency channel is singular and rejected.
double relaxation_rate(const Bath& bath, double omega);

double thermodynamic_force(double omega, double temperature);

struct CarnotPoint {
  double efficiency;  // eta_C = 1 - T_c/T_h
  double cop;         // eps_C = T_c/(T_h - T_c)
};

CarnotPoint carnot_quantities(double t_hot, double t_cold);

/// Upper edge of the refrigeration window at fixed omega_h:
/// omega_c,rev = omega_h T_c/T_h. Cooling happens on (0, omega_c,rev).
double reversible_cold_frequency(double omega_h, double t_hot, double t_cold);

}  // namespace qtricycle
