#pragma once

#include <string>
#include <variant>
#include <vector>

#include "phasebound/fock.hpp"

namespace phasebound {

struct Coherent {
  double alpha = 0.0;
};

struct PhaseCoherent {
  double x = 0.0;  // must stay below 1 for normalizability
};

struct SqueezedCoherent {
  double x = 0.0;  // coherent amplitude
  double r = 0.0;  // squeezing parameter
};

struct TruncatedLondon {
  std::size_t dim = 1;
};

struct Custom {
  std::vector<double> weights;
};

using StateSpec =
    std::variant<Coherent, PhaseCoherent, SqueezedCoherent, TruncatedLondon,
                 Custom>;

/// Poissonian photon statistics, p_k = e^{-alpha^2} alpha^{2k} / k!.
FockDistribution coherent_distribution(double alpha,
                                       double tail_tol = kDefaultTailTol);

/// Geometric photon statistics, p_k = (1 - x^2) x^{2k}, requires 0 <= x < 1.
FockDistribution phase_coherent_distribution(double x,
                                             double tail_tol = kDefaultTailTol);

/// Displaced squeezed vacuum; amplitudes built by the three-term recurrence
///   c_{n+1} = [(mu - nu) x c_n + nu sqrt(n) c_{n-1}] / (mu sqrt(n+1)),
/// mu = cosh r, with the sign of nu fixed so the photon-number variance is
/// x^2 e^{2r} + 2 sinh^2 r cosh^2 r (the phase-sensitive branch).
FockDistribution squeezed_distribution(double x, double r,
                                       double tail_tol = kDefaultTailTol);

/// Equal weight on photon numbers 0..dim-1.
FockDistribution truncated_london_distribution(std::size_t dim);

enum class Family { kCoherent, kPhaseCoherent, kSqueezedCoherent, kLondon };

/// Inverts the mean-photon-number budget N into family parameters.
/// beta (the squeezing fraction, sinh^2 r = beta N) is required for the
/// squeezed family and rejected for every other one.
StateSpec params_from_budget(Family family, double n, double beta = -1.0);

struct ClosedFormOverlap {
  double value = 0.0;
  /// True for the squeezed family: its closed form is evaluated verbatim as
  /// published and fails kappa(0) = 1, so it is a comparison curve only and
  /// must never feed the exact phi_M solver.
  bool reference_only = false;
};

/// Closed-form overlap expressions for the coherent, phase-coherent and
/// squeezed families. Throws std::invalid_argument for other variants.
ClosedFormOverlap closed_form_overlap(const StateSpec& spec, double phi);

/// Builds the distribution described by a StateSpec.
FockDistribution distribution_from_spec(const StateSpec& spec,
                                        double tail_tol = kDefaultTailTol);

/// Parses the canonical textual form, e.g. "coherent:alpha=1.0",
/// "phase-coherent:x=0.7", "squeezed:x=5.0,r=2.0", "london:dim=64",
/// "custom:@weights.csv" (one weight per line).
StateSpec parse_state_spec(const std::string& text);

/// Family tag of a spec as used in CLI output ("coherent", "phase-coherent",
/// "squeezed", "london", "custom").
std::string family_name(const StateSpec& spec);

}  // namespace phasebound
