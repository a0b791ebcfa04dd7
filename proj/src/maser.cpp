#include "qtricycle/maser.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qtricycle::maser {

namespace {

using Complex = std::complex<double>;
using Matrix9 = Eigen::Matrix<Complex, 9, 9>;

/// a*b - c*d with the rounding error of c*d recovered through fma, so the
/// difference keeps full relative accuracy even under heavy cancellation.
double product_difference(double a, double b, double c, double d) {
  const double cd = c * d;
  const double rounding = std::fma(c, d, -cd);
  return std::fma(a, b, -cd) - rounding;
}

const Bath& channel_bath(const MaserConfig& config, Channel channel) {
  return channel.bath == BathLabel::Hot ? config.hot : config.cold;
}

/// Unnormalized jump operator |1><2| +/- |1><3|; the 1/2 amplitude of the
/// decomposed contact operators sits in the 1/4 rate prefactors instead.
DensityMatrix jump_operator(Sideband sideband) {
  DensityMatrix v = DensityMatrix::Zero();
  v(0, 1) = 1.0;
  v(0, 2) = sideband == Sideband::Upper ? 1.0 : -1.0;
  return v;
}

DensityMatrix dissipator(const DensityMatrix& lop, const DensityMatrix& rho) {
  const DensityMatrix ldag_l = lop.adjoint() * lop;
  return lop * rho * lop.adjoint() - 0.5 * (ldag_l * rho + rho * ldag_l);
}

/// vec(A rho B) = (B^T kron A) vec(rho) with column-major vectorization.
Matrix9 kron3(const DensityMatrix& a, const DensityMatrix& b) {
  Matrix9 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
  return out;
}

Matrix9 vectorized_dissipator(const DensityMatrix& lop) {
  const DensityMatrix id = DensityMatrix::Identity();
  const DensityMatrix ldag_l = lop.adjoint() * lop;
  return kron3(lop.conjugate(), lop) - 0.5 * kron3(id, ldag_l) -
         0.5 * kron3(ldag_l.transpose(), id);
}

}  // namespace

MaserConfig::MaserConfig(double omega_h_, double omega_c_, double lambda_, Bath hot_,
                         Bath cold_)
    : omega_h(omega_h_), omega_c(omega_c_), lambda(lambda_), hot(hot_), cold(cold_) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("driving amplitude must be >= 0");
  }
  if (!(omega_c > lambda) || !(omega_h > omega_c) || !std::isfinite(omega_h)) {
    throw std::domain_error("filter frequencies must satisfy omega_h > omega_c > lambda");
  }
  if (!(hot.temperature > cold.temperature)) {
    throw std::domain_error("hot bath must be hotter than the cold bath");
  }
  hot.label = BathLabel::Hot;
  cold.label = BathLabel::Cold;
}

double channel_frequency(const MaserConfig& config, Channel channel) {
  const double base = channel.bath == BathLabel::Hot ? config.omega_h : config.omega_c;
  return channel.sideband == Sideband::Upper ? base + config.lambda : base - config.lambda;
}

double channel_bohr_frequency(const MaserConfig& config, Channel channel) {
  return channel.sideband == Sideband::Upper ? config.omega_c + config.lambda
                                             : config.omega_c - config.lambda;
}

int channel_floquet_index(Channel channel) {
  return channel.bath == BathLabel::Hot ? 1 : 0;
}

TransitionRates transition_rates(const MaserConfig& config) {
  if (!(config.omega_c > config.lambda)) {
    throw std::domain_error("lower sideband frequency omega_c - lambda must stay positive");
  }
  auto both_signs = [](const Bath& bath, double omega) {
    return ChannelRates{relaxation_rate(bath, omega), relaxation_rate(bath, -omega)};
  };

  TransitionRates r;
  r.hot_upper = both_signs(config.hot, config.omega_h + config.lambda);
  r.hot_lower = both_signs(config.hot, config.omega_h - config.lambda);
  r.cold_upper = both_signs(config.cold, config.omega_c + config.lambda);
  r.cold_lower = both_signs(config.cold, config.omega_c - config.lambda);

  r.emission_upper = r.hot_upper.emission + r.cold_upper.emission;
  r.emission_lower = r.hot_lower.emission + r.cold_lower.emission;
  r.absorption_upper = r.hot_upper.absorption + r.cold_upper.absorption;
  r.absorption_lower = r.hot_lower.absorption + r.cold_lower.absorption;

  r.emission_mean = 0.25 * (r.emission_upper + r.emission_lower);
  r.emission_split = 0.25 * (r.emission_upper - r.emission_lower);
  r.absorption_mean = 0.25 * (r.absorption_upper + r.absorption_lower);
  r.absorption_split = 0.25 * (r.absorption_upper - r.absorption_lower);
  return r;
}

DensityMatrix averaged_hamiltonian(const MaserConfig& config) {
  DensityMatrix h = DensityMatrix::Zero();
  h(1, 1) = config.omega_c;
  h(2, 2) = config.omega_c;
  h(1, 2) = config.lambda;
  h(2, 1) = config.lambda;
  return h;
}

Eigen::Matrix3d build_coefficient_matrix(const TransitionRates& rates) {
  const double em = rates.emission_mean;
  const double es = rates.emission_split;
  const double am = rates.absorption_mean;
  const double as = rates.absorption_split;
  if (!(em > 0.0)) {
    throw std::domain_error("singular rates: mean emission must be positive");
  }
  // feedback of the eliminated stationary coherence on the populations
  const double self = es * es / em;
  const double cross = es * as / em;

  Eigen::Matrix3d m;
  m << -2.0 * am + 2.0 * cross, em - self, em - self,
       am - cross, -em + 0.5 * self, 0.5 * self,
       am - cross, 0.5 * self, -em + 0.5 * self;
  return m;
}

LimitCycle solve_limit_cycle(const MaserConfig& config) {
  const TransitionRates rates = transition_rates(config);
  const Eigen::Matrix3d m = build_coefficient_matrix(rates);
  const double scale = m.cwiseAbs().maxCoeff();

  // two stationarity rows (rescaled to O(1)) plus the normalization row
  Eigen::Matrix3d a;
  a.row(0) = m.row(0) / scale;
  a.row(1) = m.row(1) / scale;
  a.row(2) = Eigen::RowVector3d::Ones();
  const Eigen::Vector3d b(0.0, 0.0, 1.0);

  Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
  if (!lu.isInvertible()) {
    throw std::runtime_error("degenerate limit cycle: stationarity system is rank deficient");
  }
  Eigen::Vector3d n = lu.solve(b);
  n += lu.solve(b - a * n);  // one step of iterative refinement

  LimitCycle cycle;
  cycle.n1 = n(0);
  cycle.n2 = n(1);
  cycle.n3 = n(2);
  cycle.residual = (m * n).cwiseAbs().maxCoeff();
  if (!(cycle.residual <= 1e-10 * scale)) {
    throw std::runtime_error("limit cycle solve failed: stationarity residual too large");
  }
  if (n.minCoeff() < -1e-10) {
    throw std::runtime_error("limit cycle solve failed: negative population");
  }
  cycle.coherence =
      (2.0 * rates.absorption_split * n(0) - rates.emission_split * (n(1) + n(2))) /
      rates.emission_mean;
  return cycle;
}

DensityMatrix lindblad_apply(const MaserConfig& config, Channel channel,
                             const DensityMatrix& rho) {
  if ((channel.bath != BathLabel::Hot && channel.bath != BathLabel::Cold) ||
      (channel.sideband != Sideband::Upper && channel.sideband != Sideband::Lower)) {
    throw std::domain_error("invalid dissipation channel");
  }
  const Bath& bath = channel_bath(config, channel);
  const double frequency = channel_frequency(config, channel);
  const double emission = relaxation_rate(bath, frequency);
  const double absorption = relaxation_rate(bath, -frequency);
  const DensityMatrix v = jump_operator(channel.sideband);
  return 0.25 * emission * dissipator(v, rho) +
         0.25 * absorption * dissipator(v.adjoint(), rho);
}

DensityMatrix channel_local_state(const MaserConfig& config, Channel channel) {
  const Bath& bath = channel_bath(config, channel);
  const double beta_eff = channel_frequency(config, channel) /
                          (bath.temperature * channel_bohr_frequency(config, channel));
  // thermal weights over the dressed eigenbasis |1>, (|2>-|3>)/sqrt2,
  // (|2>+|3>)/sqrt2 with energies {0, omega_c - lambda, omega_c + lambda}
  const double w_minus = std::exp(-beta_eff * (config.omega_c - config.lambda));
  const double w_plus = std::exp(-beta_eff * (config.omega_c + config.lambda));
  const double z = 1.0 + w_minus + w_plus;

  DensityMatrix state = DensityMatrix::Zero();
  state(0, 0) = 1.0 / z;
  state(1, 1) = state(2, 2) = 0.5 * (w_minus + w_plus) / z;
  state(1, 2) = state(2, 1) = 0.5 * (w_plus - w_minus) / z;
  return state;
}

DensityMatrix liouvillian_steady_state(const MaserConfig& config) {
  Matrix9 generator = Matrix9::Zero();
  for (Channel channel : all_channels()) {
    const Bath& bath = channel_bath(config, channel);
    const double frequency = channel_frequency(config, channel);
    const DensityMatrix v = jump_operator(channel.sideband);
    generator += 0.25 * relaxation_rate(bath, frequency) * vectorized_dissipator(v);
    generator += 0.25 * relaxation_rate(bath, -frequency) *
                 vectorized_dissipator(DensityMatrix(v.adjoint()));
  }
  generator /= generator.cwiseAbs().maxCoeff();

  Eigen::JacobiSVD<Matrix9> svd(generator, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (sigma(7) <= 1e-12 * sigma(0)) {
    throw std::runtime_error("degenerate steady state: Liouvillian null space is not unique");
  }
  const Eigen::Matrix<Complex, 9, 1> null_vector = svd.matrixV().col(8);

  DensityMatrix rho;
  for (int col = 0; col < 3; ++col)
    for (int row = 0; row < 3; ++row) rho(row, col) = null_vector(3 * col + row);
  rho = 0.5 * (rho + rho.adjoint()).eval();  // hermitize
  const double trace = rho.real().trace();
  if (std::abs(trace) < 1e-8) {
    throw std::runtime_error("degenerate steady state: null vector has vanishing trace");
  }
  rho /= trace;

  Eigen::SelfAdjointEigenSolver<DensityMatrix> eigensolver(rho);
  if (eigensolver.eigenvalues().minCoeff() < -1e-10) {
    throw std::runtime_error("steady state failed positivity check");
  }
  return rho;
}

CurrentsReport heat_currents(const MaserConfig& config, const LimitCycle& cycle) {
  const TransitionRates rates = transition_rates(config);
  const double pair = cycle.n2 + cycle.n3;

  // per-sideband current: w * [Gamma_absorb/2 n1 - Gamma_emit/4 (n2+n3 +/- n_c)]
  auto sideband_current = [&](double frequency, const ChannelRates& cr, double sign) {
    return frequency * product_difference(0.5 * cr.absorption, cycle.n1,
                                          0.25 * cr.emission,
                                          pair + sign * cycle.coherence);
  };

  CurrentsReport report;
  report.hot_current =
      sideband_current(config.omega_h + config.lambda, rates.hot_upper, +1.0) +
      sideband_current(config.omega_h - config.lambda, rates.hot_lower, -1.0);
  report.cold_current =
      sideband_current(config.omega_c + config.lambda, rates.cold_upper, +1.0) +
      sideband_current(config.omega_c - config.lambda, rates.cold_lower, -1.0);
  report.power = -(report.hot_current + report.cold_current);
  report.flux = report.cold_current / config.omega_c;
  if (report.power > 0.0 && report.cold_current > 0.0) {
    report.cop = report.cold_current / report.power;
  }
  report.entropy_production = -report.hot_current / config.hot.temperature -
                              report.cold_current / config.cold.temperature;
  return report;
}

double heat_current_general(const MaserConfig& config, const DensityMatrix& steady,
                            BathLabel bath) {
  const DensityMatrix hbar = averaged_hamiltonian(config);
  double total = 0.0;
  for (Channel channel : all_channels()) {
    if (channel.bath != bath) continue;
    // one work quantum omega_w rides along per hot emission event
    const double weight =
        channel_frequency(config, channel) / channel_bohr_frequency(config, channel);
    total += weight * (hbar * lindblad_apply(config, channel, steady)).trace().real();
  }
  return total;
}

double entropy_production(const CurrentsReport& report, double t_hot, double t_cold) {
  carnot_quantities(t_hot, t_cold);  // validates ordering
  const double sigma = -report.hot_current / t_hot - report.cold_current / t_cold;
  if (sigma < -1e-8) {
    throw std::runtime_error("negative entropy production: limit cycle solution is inconsistent");
  }
  return sigma;
}

}  // namespace qtricycle::maser
