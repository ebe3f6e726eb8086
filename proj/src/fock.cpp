#include "phasebound/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace phasebound {

FockDistribution::FockDistribution(std::vector<double> probs,
                                   double tail_estimate)
    : probs_(std::move(probs)), tail_estimate_(tail_estimate) {
  if (probs_.empty()) {
    throw std::invalid_argument("FockDistribution: empty probability vector");
  }
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(
          "FockDistribution: probabilities must be finite and >= 0");
    }
  }
}

FockDistribution build_distribution(const std::vector<double>& weights,
                                    double tail_tol, double tail_estimate) {
  if (weights.empty()) {
    throw std::invalid_argument("build_distribution: empty weight list");
  }
  if (weights.size() > kMaxFockDim) {
    throw TruncationCapError("build_distribution: dimension exceeds cap");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument(
          "build_distribution: weights must be finite and >= 0");
    }
    total += w;
  }
  if (total <= 0.0) {
    throw std::invalid_argument("build_distribution: all weights are zero");
  }
  (void)tail_tol;
  std::vector<double> probs(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    probs[k] = weights[k] / total;
  }
  return FockDistribution(std::move(probs), tail_estimate);
}

double overlap_kappa(const FockDistribution& dist, double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("overlap_kappa: phi must be finite");
  }
  const std::vector<double>& p = dist.probs();
  const std::complex<double> step = std::polar(1.0, phi);
  std::complex<double> rot{1.0, 0.0};
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    // resync the phasor periodically so rounding does not accumulate
    if ((k & 1023u) == 0u && k != 0u) {
      rot = std::polar(1.0, static_cast<double>(k) * phi);
    }
    re += p[k] * rot.real();
    im += p[k] * rot.imag();
    rot *= step;
  }
  double kappa = re * re + im * im;
  return std::clamp(kappa, 0.0, 1.0);
}

Moments moments(const FockDistribution& dist) {
  const std::vector<double>& p = dist.probs();
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double kd = static_cast<double>(k);
    m1 += kd * p[k];
    m2 += kd * kd * p[k];
  }
  double var = m2 - m1 * m1;
  return Moments{m1, std::max(var, 0.0)};
}

double quadratic_overlap(const FockDistribution& dist, double phi) {
  const double var = moments(dist).variance;
  return std::max(0.0, 1.0 - phi * phi * var);
}

}  // namespace phasebound
