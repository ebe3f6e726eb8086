#include "phasebound/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "phasebound/decision.hpp"

namespace phasebound {

namespace {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double to_unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

void wilson_interval(std::uint64_t positives, std::uint64_t trials,
                     double& lo, double& hi) {
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(positives) / n;
  const double z2n = z * z / n;
  const double center = (phat + z2n / 2.0) / (1.0 + z2n);
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2n / (4.0 * n)) / (1.0 + z2n);
  lo = center - half;
  hi = center + half;
}

SimResult simulate_strategy(double c, double lambda, Hypothesis hypothesis,
                            std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("simulate_strategy: trials must be >= 1");
  }
  const ROCPoint pt = eigen_oracle_point(c, lambda);
  const double p = hypothesis == Hypothesis::kH0 ? pt.p01 : pt.p11;

  const std::uint64_t stream = splitmix64_mix(seed);
  std::uint64_t positives = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (to_unit_double(splitmix64_mix(stream + i)) < p) {
      ++positives;
    }
  }

  SimResult res;
  res.trials = trials;
  res.positives = positives;
  res.rate = static_cast<double>(positives) / static_cast<double>(trials);
  wilson_interval(positives, trials, res.ci_low, res.ci_high);
  res.seed = seed;
  res.hypothesis = hypothesis;
  return res;
}

std::string hypothesis_name(Hypothesis h) {
  return h == Hypothesis::kH0 ? "H0" : "H1";
}

Hypothesis parse_hypothesis(const std::string& s) {
  if (s == "H0" || s == "h0") return Hypothesis::kH0;
  if (s == "H1" || s == "h1") return Hypothesis::kH1;
  throw std::invalid_argument("hypothesis must be H0 or H1");
}

}  // namespace phasebound
