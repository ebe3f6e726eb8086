#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phasebound {

/// phi_M estimates for one (family, N, p01) point, side by side: the
/// published closed form, the variant re-derived from the exact threshold
/// kappa*, and the exact solver value. Discrepancies between the columns are
/// data, not bugs.
struct BoundReport {
  std::string family;
  double n = 0.0;
  double p01 = 0.0;
  std::optional<double> phi_paper;
  std::optional<double> phi_corrected;
  std::optional<double> phi_exact;
  std::optional<double> ratio_exact_to_corrected;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
};

/// Published coherent-state (shot-noise) bound,
///   sqrt(log(2 / (1 + sqrt(p01(1-p01))))) / sqrt(N), natural log.
double shot_noise_bound(double n, double p01);

/// Published generic bound in terms of the photon-number spread,
///   sqrt((1 - sqrt(p01(1-p01))) / 2) / dn.
double fluctuation_bound(double delta_n, double p01);

/// Same bound rebuilt from the exact threshold:
///   sqrt(1 - kappa*(p01)) / dn = sqrt((1 - 2 sqrt(p01(1-p01))) / 2) / dn.
/// Agrees with fluctuation_bound at p01 = 0 and differs for p01 > 0 by a
/// factor 2 inside the radical.
double corrected_fluctuation_bound(double delta_n, double p01);

/// Published phase-coherent bound, scaling as 1/sqrt(N(N+1)).
double phase_coherent_bound(double n, double p01);

/// Published squeezed-coherent bound; beta must lie strictly inside (0, 1).
double squeezed_bound(double n, double beta, double p01);

/// OLS fit of log(phi) against log(N); the slope is the scaling exponent.
ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace phasebound
