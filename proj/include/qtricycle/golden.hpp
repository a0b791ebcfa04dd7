#pragma once

#include <functional>

namespace qtricycle::optim {

struct ScalarMaximum {
  double position = 0.0;
  double value = 0.0;
  int evaluations = 0;
  double bracket_low = 0.0;   // grid bracket handed to the local refinement
  double bracket_high = 0.0;
  bool converged = false;
  bool edge = false;          // best coarse sample sat at the window edge
};

/// Bracketed maximization of f on the open interval (low, high).
///
/// A coarse scan over the union of log- and linearly-spaced points locates
/// the global bracket (no unimodality assumed), golden-section narrows it
/// to relative width rel_tol, and a final three-point parabolic fit at a
/// fixed stencil polishes the maximizer well below the golden plateau set
/// by rounding noise in f. Grid ties are broken toward larger positions.
///
/// Endpoints are never evaluated. If require_positive is set and no grid
/// sample is positive, throws std::runtime_error.
ScalarMaximum maximize_on_window(const std::function<double(double)>& f,
                                 double low, double high, double rel_tol,
                                 int grid_points = 64,
                                 bool require_positive = false);

}  // namespace qtricycle::optim
