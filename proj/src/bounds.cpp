#include "phasebound/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "phasebound/decision.hpp"

namespace phasebound {

namespace {

double q_of(double p01) {
  if (!(p01 >= 0.0 && p01 <= 1.0)) {
    throw std::invalid_argument("bound: p01 must lie in [0, 1]");
  }
  return std::sqrt(p01 * (1.0 - p01));
}

}  // namespace

double shot_noise_bound(double n, double p01) {
  if (!(n > 0.0)) {
    throw std::invalid_argument("shot_noise_bound: N must be > 0");
  }
  const double q = q_of(p01);
  return std::sqrt(std::log(2.0 / (1.0 + q))) / std::sqrt(n);
}

double fluctuation_bound(double delta_n, double p01) {
  if (!(delta_n > 0.0)) {
    throw NotDetectableError("fluctuation_bound: dn must be > 0");
  }
  return std::sqrt((1.0 - q_of(p01)) / 2.0) / delta_n;
}

double corrected_fluctuation_bound(double delta_n, double p01) {
  if (!(delta_n > 0.0)) {
    throw NotDetectableError("corrected_fluctuation_bound: dn must be > 0");
  }
  return std::sqrt(1.0 - kappa_threshold(p01)) / delta_n;
}

double phase_coherent_bound(double n, double p01) {
  if (!(n > 0.0)) {
    throw std::invalid_argument("phase_coherent_bound: N must be > 0");
  }
  const double q = q_of(p01);
  return std::sqrt((1.0 - q) / (1.0 + q)) / std::sqrt(n * (n + 1.0));
}

double squeezed_bound(double n, double beta, double p01) {
  if (!(n > 0.0)) {
    throw std::invalid_argument("squeezed_bound: N must be > 0");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument(
        "squeezed_bound: beta must lie strictly inside (0, 1)");
  }
  return std::sqrt((1.0 - q_of(p01)) / (beta * (1.0 - beta))) / (2.0 * n);
}

ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("fit_power_law: need at least 3 points");
  }
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [xi, yi] : points) {
    if (!(xi > 0.0) || !(yi > 0.0)) {
      throw std::invalid_argument("fit_power_law: points must be positive");
    }
    sx += std::log(xi);
    sy += std::log(yi);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [xi, yi] : points) {
    const double dx = std::log(xi) - mx;
    const double dy = std::log(yi) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_power_law: degenerate abscissae");
  }
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.n_points = points.size();
  return fit;
}

}  // namespace phasebound
