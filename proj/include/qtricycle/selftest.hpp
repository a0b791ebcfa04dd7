#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtricycle/core.hpp"

namespace qtricycle::selftest {

struct Check {
  std::string name;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::vector<Check> checks;
  bool all_passed() const;
  std::string text() const;  // one pass/fail line per check
};

/// Worst relative violation of detailed balance,
/// |Gamma(-w) - exp(-w/T) Gamma(w)| / Gamma(w), over random baths and
/// frequencies. Exposed with an injectable rate function so a corrupted
/// rate can be shown to trip the check.
double detailed_balance_worst_residual(
    const std::function<double(const Bath&, double)>& rate, int samples,
    std::uint64_t seed);

/// Cross-route consistency suite: population-matrix steady state against
/// the Liouvillian null space, explicit against weighted-trace currents,
/// the undriven solver against the closed-form flux, the asymmetric-model
/// optimum against its closed-form maximizer, and a first/second-law sweep.
Report run(int samples = 200, std::uint64_t seed = 0x51CDE5ull);

}  // namespace qtricycle::selftest
