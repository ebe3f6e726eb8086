#include "phasebound/decision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasebound/states.hpp"

namespace phasebound {

namespace {

void check_unit_interval(const char* what, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

constexpr double kEigenZeroTol = 1e-14;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

double detection_probability(double kappa, double p01) {
  check_unit_interval("detection_probability: kappa", kappa);
  check_unit_interval("detection_probability: p01", p01);
  if (p01 >= kappa) {
    return 1.0;
  }
  const double amp =
      std::sqrt(p01 * kappa) + std::sqrt((1.0 - p01) * (1.0 - kappa));
  return std::min(amp * amp, 1.0);
}

double kappa_threshold(double p01) {
  check_unit_interval("kappa_threshold: p01", p01);
  if (p01 >= 0.5) {
    throw DegenerateRegimeError(
        "kappa_threshold: p01 >= 1/2 admits no finite threshold");
  }
  const double kstar = 0.5 * (1.0 + 2.0 * std::sqrt(p01 * (1.0 - p01)));
  // Cross-check against the defining relation P11(kappa*) = 1/2.
  double lo = std::max(p01, 0.5);
  double hi = 1.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (detection_probability(mid, p01) > 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (std::abs(0.5 * (lo + hi) - kstar) > 1e-9) {
    throw std::logic_error("kappa_threshold: bisection cross-check failed");
  }
  return kstar;
}

std::array<std::array<double, 2>, 2> oracle_projector(double c,
                                                      double lambda) {
  check_unit_interval("oracle_projector: c", c);
  if (!std::isfinite(lambda)) {
    throw std::invalid_argument("oracle_projector: lambda must be finite");
  }
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  // rho1 - lambda rho0 in the orthonormal basis {|psi0>, |perp>}.
  const double a = c * c - lambda;
  const double b = c * s;
  const double d = 1.0 - c * c;

  std::array<std::array<double, 2>, 2> proj{{{0.0, 0.0}, {0.0, 0.0}}};
  if (b == 0.0) {
    if (a > kEigenZeroTol) proj[0][0] = 1.0;
    if (d > kEigenZeroTol) proj[1][1] = 1.0;
  } else {
    const double tr = a + d;
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
    for (double t : {0.5 * (tr + disc), 0.5 * (tr - disc)}) {
      if (t <= kEigenZeroTol) continue;
      double vx = b;
      double vy = t - a;
      const double norm = std::hypot(vx, vy);
      vx /= norm;
      vy /= norm;
      proj[0][0] += vx * vx;
      proj[0][1] += vx * vy;
      proj[1][0] += vy * vx;
      proj[1][1] += vy * vy;
    }
  }
  return proj;
}

ROCPoint eigen_oracle_point(double c, double lambda) {
  const auto proj = oracle_projector(c, lambda);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double p01 = std::clamp(proj[0][0], 0.0, 1.0);
  const double p11 = std::clamp(
      c * c * proj[0][0] + 2.0 * c * s * proj[0][1] + s * s * proj[1][1], 0.0,
      1.0);
  return ROCPoint{p01, p11, lambda, true};
}

std::vector<ROCPoint> roc_analytic(double kappa,
                                   const std::vector<double>& p01_grid) {
  std::vector<ROCPoint> out;
  out.reserve(p01_grid.size());
  for (double p01 : p01_grid) {
    out.push_back(ROCPoint{p01, detection_probability(kappa, p01), 0.0, false});
  }
  return out;
}

std::vector<ROCPoint> roc_from_oracle(double c,
                                      const std::vector<double>& lambda_grid) {
  std::vector<ROCPoint> out;
  out.reserve(lambda_grid.size());
  for (double lam : lambda_grid) {
    out.push_back(eigen_oracle_point(c, lam));
  }
  return out;
}

std::vector<double> default_lambda_grid(std::size_t points) {
  if (points < 4) {
    throw std::invalid_argument("default_lambda_grid: need at least 4 points");
  }
  const std::size_t n_lin = std::max<std::size_t>(2, points * 64 / 400);
  const std::size_t n_geo = points - n_lin;
  std::vector<double> grid;
  grid.reserve(points);
  for (std::size_t i = 0; i < n_lin; ++i) {
    grid.push_back(-2.0 + 2.0 * static_cast<double>(i) /
                              static_cast<double>(n_lin - 1));
  }
  const double lo = 1e-4;
  const double hi = 50.0;
  for (std::size_t i = 0; i < n_geo; ++i) {
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) /
                                              static_cast<double>(n_geo - 1)));
  }
  return grid;
}

PhiMinResult min_detectable_phase(const FockDistribution& dist, double p01,
                                  double phi_max, std::size_t grid_points) {
  if (!(phi_max > 0.0 && phi_max <= kPi)) {
    throw std::invalid_argument(
        "min_detectable_phase: phi_max must lie in (0, pi]");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("min_detectable_phase: grid too coarse");
  }
  const double kstar = kappa_threshold(p01);

  // First downward crossing of kappa* on the scan grid.
  double prev_phi = 0.0;
  double cross_phi = -1.0;
  for (std::size_t i = 1; i <= grid_points; ++i) {
    const double phi = phi_max * static_cast<double>(i) /
                       static_cast<double>(grid_points);
    if (overlap_kappa(dist, phi) <= kstar) {
      cross_phi = phi;
      break;
    }
    prev_phi = phi;
  }
  if (cross_phi < 0.0) {
    throw NotDetectableError(
        "min_detectable_phase: overlap never drops to the threshold");
  }

  double lo = prev_phi;
  double hi = cross_phi;
  for (int i = 0; i < 200 && (hi - lo) > 1e-10 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (overlap_kappa(dist, mid) > kstar) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  PhiMinResult res;
  res.phi_min = 0.5 * (lo + hi);
  res.kappa_star = kstar;
  res.method = PhiMinMethod::kExactNumeric;
  res.bracket = {prev_phi, cross_phi};
  return res;
}

BetaScanResult optimal_squeezing_fraction(double n, double p01) {
  if (!(n > 0.0)) {
    throw std::invalid_argument("optimal_squeezing_fraction: N must be > 0");
  }
  auto phi_of_beta = [&](double beta) {
    const StateSpec spec =
        params_from_budget(Family::kSqueezedCoherent, n, beta);
    return min_detectable_phase(distribution_from_spec(spec), p01).phi_min;
  };

  BetaScanResult res;
  res.samples.reserve(33);
  double best_beta = 0.0;
  double best_phi = 1e300;
  for (int i = 0; i <= 32; ++i) {
    const double beta = static_cast<double>(i) / 32.0;
    const double phi = phi_of_beta(beta);
    res.samples.emplace_back(beta, phi);
    if (phi < best_phi) {
      best_phi = phi;
      best_beta = beta;
    }
  }

  // Golden-section refinement around the global shape on [0, 1].
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0, b = 1.0;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = phi_of_beta(x1);
  double f2 = phi_of_beta(x2);
  while (b - a > 1e-4) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = phi_of_beta(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = phi_of_beta(x2);
    }
  }
  const double beta_golden = 0.5 * (a + b);
  const double phi_golden = phi_of_beta(beta_golden);
  if (phi_golden < best_phi) {
    best_phi = phi_golden;
    best_beta = beta_golden;
  }
  res.beta_star = best_beta;
  res.phi_at_beta_star = best_phi;
  return res;
}

}  // namespace phasebound
