#pragma once

#include <array>
#include <utility>
#include <vector>

#include "phasebound/fock.hpp"

namespace phasebound {

class NotDetectableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateRegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DecisionProblem {
  double overlap_mod = 0.0;  // |<psi0|psi1>|, so kappa = overlap_mod^2
  double false_alarm = 0.0;
};

struct ROCPoint {
  double p01 = 0.0;
  double p11 = 0.0;
  double lambda = 0.0;
  bool has_lambda = false;
};

enum class PhiMinMethod { kExactNumeric, kClosedForm };

struct PhiMinResult {
  double phi_min = 0.0;
  double kappa_star = 0.0;
  PhiMinMethod method = PhiMinMethod::kExactNumeric;
  std::pair<double, double> bracket{0.0, 0.0};
};

/// Maximum detection probability at fixed overlap and false-alarm budget:
///   [sqrt(p01 kappa) + sqrt((1-p01)(1-kappa))]^2  for p01 <= kappa,
///   1                                             for p01 >= kappa.
double detection_probability(double kappa, double p01);

/// The unique kappa* in [max(p01, 1/2), 1] at which the detection
/// probability drops to 1/2; closed form (1 + 2 sqrt(p01 (1-p01))) / 2,
/// cross-checked by bisection. Throws DegenerateRegimeError for p01 >= 1/2.
double kappa_threshold(double p01);

/// Projector onto the strictly positive eigenspace of rho1 - lambda rho0,
/// in the orthonormal basis {|psi0>, |perp>}.
std::array<std::array<double, 2>, 2> oracle_projector(double c, double lambda);

/// One point of the optimal-measurement ROC: diagonalizes rho1 - lambda rho0
/// in the two-dimensional span of the hypotheses and projects onto the
/// strictly positive eigenspace.
ROCPoint eigen_oracle_point(double c, double lambda);

std::vector<ROCPoint> roc_analytic(double kappa,
                                   const std::vector<double>& p01_grid);

std::vector<ROCPoint> roc_from_oracle(double c,
                                      const std::vector<double>& lambda_grid);

/// Default Lagrange-multiplier sweep: 64 points linear on [-2, 0] plus
/// 336 points geometric on (0, 50], covering the full ROC in practice.
std::vector<double> default_lambda_grid(std::size_t points = 400);

/// Smallest phi in (0, phi_max] where the exact overlap drops to
/// kappa_threshold(p01): coarse scan for the first downward crossing, then
/// bisection. Crossings narrower than the scan step may be missed; widen
/// grid_points if needed. Throws NotDetectableError when no crossing exists.
PhiMinResult min_detectable_phase(const FockDistribution& dist, double p01,
                                  double phi_max = 3.14159265358979323846,
                                  std::size_t grid_points = 4096);

struct BetaScanResult {
  double beta_star = 0.0;
  double phi_at_beta_star = 0.0;
  std::vector<std::pair<double, double>> samples;  // (beta, phi_min)
};

/// Minimizes phi_min over the squeezing fraction beta in [0, 1] on the exact
/// pipeline, by golden-section search to |delta beta| <= 1e-4; also returns
/// 33 evenly spaced curve samples.
BetaScanResult optimal_squeezing_fraction(double n, double p01);

}  // namespace phasebound
