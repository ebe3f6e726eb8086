#pragma once

#include <cstdint>
#include <string>

namespace phasebound {

enum class Hypothesis { kH0, kH1 };

struct SimResult {
  std::uint64_t trials = 0;
  std::uint64_t positives = 0;
  double rate = 0.0;
  double ci_low = 0.0;   // 95% Wilson interval
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  Hypothesis hypothesis = Hypothesis::kH0;
};

/// 95% Wilson score interval for a binomial rate.
void wilson_interval(std::uint64_t positives, std::uint64_t trials,
                     double& lo, double& hi);

/// Draws `trials` Bernoulli outcomes of the optimal binary measurement under
/// the given hypothesis. The success probability is the projector expectation
/// <psi_h| Pi_+(lambda) |psi_h> from eigen_oracle_point, which is exact for
/// pure states, so no state-vector simulation is involved.
///
/// Randomness is counter-based: trial i uses
///   u_i = tofloat(splitmix64_mix(splitmix64_mix(seed) + i)),
/// so the result is bit-identical for a given seed regardless of execution
/// order or parallelism.
SimResult simulate_strategy(double c, double lambda, Hypothesis hypothesis,
                            std::uint64_t trials, std::uint64_t seed);

std::string hypothesis_name(Hypothesis h);
Hypothesis parse_hypothesis(const std::string& s);

}  // namespace phasebound
