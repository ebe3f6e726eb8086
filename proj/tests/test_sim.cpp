#include <cmath>

#include "doctest.h"
#include "phasebound/decision.hpp"
#include "phasebound/sim.hpp"

using namespace phasebound;

TEST_CASE("orthogonal states always trigger under H1") {
  const auto res = simulate_strategy(0.0, 0.5, Hypothesis::kH1, 1000, 42);
  CHECK(res.positives == res.trials);
  CHECK(res.rate == 1.0);
}

TEST_CASE("simulation is reproducible under a fixed seed") {
  const auto a = simulate_strategy(0.7, 1.0, Hypothesis::kH1, 20000, 123);
  const auto b = simulate_strategy(0.7, 1.0, Hypothesis::kH1, 20000, 123);
  CHECK(a.positives == b.positives);
  CHECK(a.rate == b.rate);
  CHECK(a.ci_low == b.ci_low);

  const auto c = simulate_strategy(0.7, 1.0, Hypothesis::kH1, 20000, 124);
  CHECK(a.positives != c.positives);
}

TEST_CASE("rate and interval bookkeeping") {
  const auto res = simulate_strategy(0.9, 0.8, Hypothesis::kH0, 5000, 7);
  CHECK(res.rate ==
        static_cast<double>(res.positives) / static_cast<double>(res.trials));
  CHECK(res.ci_low <= res.rate);
  CHECK(res.rate <= res.ci_high);
  CHECK(res.seed == 7);

  CHECK_THROWS_AS(simulate_strategy(0.5, 1.0, Hypothesis::kH0, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_strategy(1.5, 1.0, Hypothesis::kH0, 10, 0),
                  std::invalid_argument);
}

TEST_CASE("indistinguishable states give identical rates") {
  // c = 1 means p01 == p11; the same seed then draws the same stream.
  const auto h0 = simulate_strategy(1.0, 0.4, Hypothesis::kH0, 10000, 9);
  const auto h1 = simulate_strategy(1.0, 0.4, Hypothesis::kH1, 10000, 9);
  CHECK(h0.positives == h1.positives);
}

TEST_CASE("empirical rate matches the analytic anchor") {
  // kappa = 0.8, lambda = 5/3 puts the oracle at (p01, p11) = (0.1, 0.5)
  const double c = std::sqrt(0.8);
  const double lambda = 5.0 / 3.0;
  const auto pt = eigen_oracle_point(c, lambda);
  CHECK(pt.p01 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(pt.p11 == doctest::Approx(0.5).epsilon(1e-12));

  const auto res = simulate_strategy(c, lambda, Hypothesis::kH1, 100000, 2024);
  CHECK(res.ci_low <= 0.5);
  CHECK(0.5 <= res.ci_high);
}

TEST_CASE("Wilson interval covers the truth at the nominal rate") {
  const double c = std::sqrt(0.8);
  const double lambda = 5.0 / 3.0;
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto res =
        simulate_strategy(c, lambda, Hypothesis::kH1, 10000, seed);
    if (res.ci_low <= 0.5 && 0.5 <= res.ci_high) ++covered;
  }
  CHECK(covered >= 45);
}
