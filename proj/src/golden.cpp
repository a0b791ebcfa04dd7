#include "qtricycle/golden.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qtricycle::optim {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio
constexpr double kParabolicStep = 2e-5;         // relative stencil for the polish

std::vector<double> scan_grid(double low, double high, int points) {
  const int n_lin = std::max(points / 2, 2);
  const int n_log = std::max(points - n_lin, 2);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n_lin + n_log));
  for (int i = 0; i < n_lin; ++i) {
    grid.push_back(low + (high - low) * (i + 1) / (n_lin + 1));
  }
  // log spacing resolves optima sitting decades below the upper edge;
  // with a zero lower edge start eight decades down from the top
  const double log_low = low > 0.0 ? low : high * 1e-8;
  const double ratio = high / log_low;
  for (int i = 0; i < n_log; ++i) {
    grid.push_back(log_low * std::pow(ratio, (i + 1.0) / (n_log + 1)));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

ScalarMaximum maximize_on_window(const std::function<double(double)>& f,
                                 double low, double high, double rel_tol,
                                 int grid_points, bool require_positive) {
  if (!(low >= 0.0) || !(high > low)) {
    throw std::domain_error("search window must satisfy 0 <= low < high");
  }
  if (!(rel_tol > 1e-14) || !(rel_tol < 1e-3)) {
    throw std::domain_error("relative tolerance must lie in (1e-14, 1e-3)");
  }
  if (grid_points < 4) throw std::domain_error("grid needs at least 4 points");

  ScalarMaximum result;
  auto eval = [&](double x) {
    ++result.evaluations;
    return f(x);
  };

  const std::vector<double> grid = scan_grid(low, high, grid_points);
  std::size_t best = 0;
  double best_value = eval(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = eval(grid[i]);
    if (v >= best_value) {  // ties resolved toward larger positions
      best_value = v;
      best = i;
    }
  }
  if (require_positive && !(best_value > 0.0)) {
    throw std::runtime_error("objective is non-positive across the search window");
  }

  result.edge = (best == 0 || best + 1 == grid.size());
  double a = best > 0 ? grid[best - 1] : low;
  double b = best + 1 < grid.size() ? grid[best + 1] : high;
  result.bracket_low = a;
  result.bracket_high = b;

  // golden-section narrowing of [a, b]
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  for (int iter = 0; iter < 400 && (b - a) > rel_tol * std::max(std::abs(a), std::abs(b));
       ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = eval(x1);
    }
  }
  result.converged = (b - a) <= rel_tol * std::max(std::abs(a), std::abs(b));

  double x_best = f1 >= f2 ? x1 : x2;
  double f_best = std::max(f1, f2);

  // Parabolic polish. Near the peak the objective is flat to rounding noise
  // over a width ~sqrt(eps), so section search alone cannot localize the
  // maximizer much beyond that; a vertex fit on a wider stencil can.
  const double step = kParabolicStep * std::abs(x_best);
  if (step > 0.0 && x_best - step > low && x_best + step < high) {
    const double f_minus = eval(x_best - step);
    const double f_plus = eval(x_best + step);
    const double curvature = f_plus - 2.0 * f_best + f_minus;
    if (curvature < 0.0) {
      double shift = 0.5 * step * (f_minus - f_plus) / curvature;
      shift = std::clamp(shift, -step, step);
      const double x_vertex = x_best + shift;
      if (x_vertex > low && x_vertex < high) {
        x_best = x_vertex;
        f_best = eval(x_vertex);
      }
    }
  }

  result.position = x_best;
  result.value = f_best;
  return result;
}

}  // namespace qtricycle::optim
