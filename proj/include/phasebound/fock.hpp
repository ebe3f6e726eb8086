#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace phasebound {

/// Hard cap on truncation dimension; constructors throw TruncationCapError
/// instead of silently truncating past this.
inline constexpr std::size_t kMaxFockDim = std::size_t{1} << 20;

/// Default bound on discarded probability mass when truncating.
inline constexpr double kDefaultTailTol = 1e-12;

class TruncationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Truncated photon-number probability distribution p_k, k = 0..dim-1.
/// The overlap of a pure state with its phase-shifted image depends only on
/// the p_k, so this is the sole state representation in the library.
class FockDistribution {
 public:
  FockDistribution(std::vector<double> probs, double tail_estimate);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t dim() const { return probs_.size(); }
  double tail_estimate() const { return tail_estimate_; }

 private:
  std::vector<double> probs_;
  double tail_estimate_;
};

/// Normalizes nonnegative weights into a FockDistribution.
/// Throws std::invalid_argument on an empty list, all-zero weights, or any
/// negative / non-finite entry.
FockDistribution build_distribution(const std::vector<double>& weights,
                                    double tail_tol = kDefaultTailTol,
                                    double tail_estimate = 0.0);

/// Squared modulus of the number-distribution characteristic function,
///   kappa(phi) = |sum_k p_k e^{i k phi}|^2,
/// clamped to [0, 1].
double overlap_kappa(const FockDistribution& dist, double phi);

/// Mean photon number and photon-number variance.
Moments moments(const FockDistribution& dist);

/// Small-phase expansion 1 - phi^2 * variance, clamped below at 0.
/// Agrees with overlap_kappa to O(phi^4).
double quadratic_overlap(const FockDistribution& dist, double phi);

}  // namespace phasebound
