#include "phasebound/states.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace phasebound {

namespace {

double checked_param(const std::string& what, double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(what + " must be finite");
  }
  return v;
}

// Un-normalized squeezed-coherent weights |c_n|^2 via the amplitude
// recurrence; nu = sign * sinh(r).
std::vector<double> squeezed_weights(double x, double r, int sign,
                                     std::size_t dim) {
  const double mu = std::cosh(r);
  const double nu = sign * std::sinh(r);
  std::vector<double> w(dim, 0.0);
  double c_prev = 0.0;
  double c_cur = 1.0;
  double scale2 = 1.0;  // accumulated squared rescale factor
  w[0] = 1.0;
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    const double nd = static_cast<double>(n);
    double c_next = ((mu - nu) * x * c_cur + nu * std::sqrt(nd) * c_prev) /
                    (mu * std::sqrt(nd + 1.0));
    c_prev = c_cur;
    c_cur = c_next;
    if (std::abs(c_cur) > 1e150) {
      c_prev *= 1e-150;
      c_cur *= 1e-150;
      scale2 *= 1e300;
      for (std::size_t k = 0; k <= n + 1; ++k) w[k] /= 1e300;
    }
    w[n + 1] = scale2 * c_cur * c_cur;
  }
  return w;
}

int squeezed_nu_sign() {
  // The branch is fixed by requiring the photon-number variance
  // x^2 e^{2r} + 2 sinh^2 r cosh^2 r; probe once at a small test point.
  static const int sign = [] {
    const double x = 1.0, r = 0.5;
    const double target =
        x * x * std::exp(2.0 * r) +
        2.0 * std::sinh(r) * std::sinh(r) * std::cosh(r) * std::cosh(r);
    double best_err = 1e300;
    int best = 1;
    for (int s : {+1, -1}) {
      auto w = squeezed_weights(x, r, s, 64);
      auto d = build_distribution(w);
      const double err = std::abs(moments(d).variance - target);
      if (err < best_err) {
        best_err = err;
        best = s;
      }
    }
    return best;
  }();
  return sign;
}

}  // namespace

FockDistribution coherent_distribution(double alpha, double tail_tol) {
  checked_param("coherent_distribution: alpha", alpha);
  if (alpha < 0.0) {
    throw std::invalid_argument("coherent_distribution: alpha must be >= 0");
  }
  if (alpha == 0.0) {
    return FockDistribution({1.0}, 0.0);
  }
  const double lam = alpha * alpha;
  const double log_lam = std::log(lam);
  auto log_pmf = [&](double k) {
    return -lam + k * log_lam - std::lgamma(k + 1.0);
  };
  // Grow D until the geometric-ratio bound on the Poisson tail is below tol.
  std::size_t dim = static_cast<std::size_t>(lam + 10.0 * std::sqrt(lam)) + 20;
  double tail = 0.0;
  for (;;) {
    if (dim > kMaxFockDim) {
      throw TruncationCapError("coherent_distribution: truncation cap hit");
    }
    const double kd = static_cast<double>(dim);
    if (kd > lam) {
      tail = std::exp(log_pmf(kd)) / (1.0 - lam / (kd + 1.0));
      if (tail < tail_tol) break;
    }
    dim += dim / 8 + 16;
  }
  std::vector<double> w(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    w[k] = std::exp(log_pmf(static_cast<double>(k)));
  }
  return build_distribution(w, tail_tol, tail);
}

FockDistribution phase_coherent_distribution(double x, double tail_tol) {
  checked_param("phase_coherent_distribution: x", x);
  if (x < 0.0 || x >= 1.0) {
    throw std::invalid_argument(
        "phase_coherent_distribution: x must lie in [0, 1)");
  }
  if (x == 0.0) {
    return FockDistribution({1.0}, 0.0);
  }
  const double log_x2 = 2.0 * std::log(x);
  // Tail mass past D is exactly x^{2D}.
  const std::size_t dim =
      static_cast<std::size_t>(std::ceil(std::log(tail_tol) / log_x2)) + 1;
  if (dim > kMaxFockDim) {
    throw TruncationCapError("phase_coherent_distribution: truncation cap hit");
  }
  std::vector<double> w(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    w[k] = std::exp(static_cast<double>(k) * log_x2);
  }
  return build_distribution(w, tail_tol,
                            std::exp(static_cast<double>(dim) * log_x2));
}

FockDistribution squeezed_distribution(double x, double r, double tail_tol) {
  checked_param("squeezed_distribution: x", x);
  checked_param("squeezed_distribution: r", r);
  if (x < 0.0 || r < 0.0) {
    throw std::invalid_argument("squeezed_distribution: x, r must be >= 0");
  }
  if (r == 0.0) {
    return coherent_distribution(x, tail_tol);
  }
  const int sign = squeezed_nu_sign();
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double mean = x * x + sh2;
  const double var = x * x * std::exp(2.0 * r) + 2.0 * sh2 * (sh2 + 1.0);
  std::size_t dim =
      static_cast<std::size_t>(mean + 10.0 * std::sqrt(var)) + 32;
  for (;;) {
    if (dim > kMaxFockDim) {
      throw TruncationCapError("squeezed_distribution: truncation cap hit");
    }
    std::vector<double> w = squeezed_weights(x, r, sign, dim);
    double total = 0.0;
    for (double v : w) total += v;
    // Geometric extrapolation of the trailing mass (step 2 so the odd-k
    // zeros of squeezed vacuum do not break the ratio).
    const double head = w[dim - 3] + w[dim - 4];
    const double last = w[dim - 1] + w[dim - 2];
    if (head > 0.0 && last < head) {
      const double ratio = last / head;
      const double tail = (last / total) * ratio / (1.0 - ratio);
      if (tail < tail_tol) {
        return build_distribution(w, tail_tol, tail);
      }
    }
    dim += dim / 2 + 32;
  }
}

FockDistribution truncated_london_distribution(std::size_t dim) {
  if (dim < 1) {
    throw std::invalid_argument(
        "truncated_london_distribution: dim must be >= 1");
  }
  if (dim > kMaxFockDim) {
    throw TruncationCapError("truncated_london_distribution: dim exceeds cap");
  }
  std::vector<double> p(dim, 1.0 / static_cast<double>(dim));
  return FockDistribution(std::move(p), 0.0);
}

StateSpec params_from_budget(Family family, double n, double beta) {
  checked_param("params_from_budget: N", n);
  if (n < 0.0) {
    throw std::invalid_argument("params_from_budget: N must be >= 0");
  }
  const bool has_beta = beta >= 0.0;
  if (family == Family::kSqueezedCoherent) {
    if (!has_beta || beta > 1.0) {
      throw std::invalid_argument(
          "params_from_budget: squeezed family needs beta in [0, 1]");
    }
  } else if (has_beta) {
    throw std::invalid_argument(
        "params_from_budget: beta only applies to the squeezed family");
  }
  switch (family) {
    case Family::kCoherent:
      return Coherent{std::sqrt(n)};
    case Family::kPhaseCoherent:
      return PhaseCoherent{std::sqrt(n / (n + 1.0))};
    case Family::kSqueezedCoherent: {
      const double sh2 = beta * n;
      return SqueezedCoherent{std::sqrt((1.0 - beta) * n),
                              std::asinh(std::sqrt(sh2))};
    }
    case Family::kLondon:
      return TruncatedLondon{
          static_cast<std::size_t>(std::llround(2.0 * n + 1.0))};
  }
  throw std::invalid_argument("params_from_budget: unknown family");
}

ClosedFormOverlap closed_form_overlap(const StateSpec& spec, double phi) {
  if (const auto* c = std::get_if<Coherent>(&spec)) {
    const double a2 = c->alpha * c->alpha;
    return {std::exp(-2.0 * a2 * (1.0 - std::cos(phi))), false};
  }
  if (const auto* p = std::get_if<PhaseCoherent>(&spec)) {
    const double x2 = p->x * p->x;
    const double num = 1.0 + x2 * x2 - 2.0 * x2;
    const double den = 1.0 + x2 * x2 - 2.0 * x2 * std::cos(phi);
    return {num / den, false};
  }
  if (const auto* s = std::get_if<SqueezedCoherent>(&spec)) {
    const double e2r = std::exp(2.0 * s->r);
    const double c2p = std::cos(2.0 * phi);
    const double s1 = (e2r * (3.0 + c2p) + (1.0 - c2p) / e2r) / 8.0;
    const double s2 = (e2r * (1.0 - c2p) + (3.0 + c2p) / e2r) / 8.0;
    const double cp = 1.0 - std::cos(phi);
    const double sp = std::sin(phi);
    const double x2 = s->x * s->x;
    const double val =
        std::exp(-x2 * (cp * cp / (2.0 * s1 * s1) + sp * sp / (2.0 * s2 * s2))) /
        (2.0 * s1 * s2);
    return {val, true};
  }
  throw std::invalid_argument(
      "closed_form_overlap: no closed form for this state variant");
}

FockDistribution distribution_from_spec(const StateSpec& spec,
                                        double tail_tol) {
  return std::visit(
      [&](const auto& s) -> FockDistribution {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coherent>) {
          return coherent_distribution(s.alpha, tail_tol);
        } else if constexpr (std::is_same_v<T, PhaseCoherent>) {
          return phase_coherent_distribution(s.x, tail_tol);
        } else if constexpr (std::is_same_v<T, SqueezedCoherent>) {
          return squeezed_distribution(s.x, s.r, tail_tol);
        } else if constexpr (std::is_same_v<T, TruncatedLondon>) {
          return truncated_london_distribution(s.dim);
        } else {
          return build_distribution(s.weights, tail_tol);
        }
      },
      spec);
}

namespace {

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("state spec: bad number '" + s + "'");
  }
  if (pos != s.size()) {
    throw std::invalid_argument("state spec: bad number '" + s + "'");
  }
  return v;
}

}  // namespace

StateSpec parse_state_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("state spec: expected 'family:params', got '" +
                                text + "'");
  }
  const std::string family = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);

  auto kv = [&rest](const std::string& key) -> std::string {
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("state spec: expected key=value, got '" +
                                    item + "'");
      }
      if (item.substr(0, eq) == key) {
        return item.substr(eq + 1);
      }
    }
    throw std::invalid_argument("state spec: missing parameter '" + key + "'");
  };

  if (family == "coherent") {
    const double alpha = parse_double(kv("alpha"));
    if (!(alpha >= 0.0)) {
      throw std::invalid_argument("state spec: alpha must be >= 0");
    }
    return Coherent{alpha};
  }
  if (family == "phase-coherent") {
    const double x = parse_double(kv("x"));
    if (!(x >= 0.0 && x < 1.0)) {
      throw std::invalid_argument("state spec: x must lie in [0, 1)");
    }
    return PhaseCoherent{x};
  }
  if (family == "squeezed") {
    const double x = parse_double(kv("x"));
    const double r = parse_double(kv("r"));
    if (!(x >= 0.0) || !(r >= 0.0)) {
      throw std::invalid_argument("state spec: x, r must be >= 0");
    }
    return SqueezedCoherent{x, r};
  }
  if (family == "london") {
    const double dim = parse_double(kv("dim"));
    if (!(dim >= 1.0) || dim != std::floor(dim)) {
      throw std::invalid_argument("state spec: dim must be an integer >= 1");
    }
    return TruncatedLondon{static_cast<std::size_t>(dim)};
  }
  if (family == "custom") {
    if (rest.empty() || rest[0] != '@') {
      throw std::invalid_argument("state spec: custom expects '@file'");
    }
    const std::string path = rest.substr(1);
    std::ifstream in(path);
    if (!in) {
      throw std::invalid_argument("state spec: cannot open '" + path + "'");
    }
    std::vector<double> weights;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      weights.push_back(parse_double(line));
    }
    if (weights.empty()) {
      throw std::invalid_argument("state spec: '" + path + "' has no weights");
    }
    return Custom{std::move(weights)};
  }
  throw std::invalid_argument("state spec: unknown family '" + family + "'");
}

std::string family_name(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coherent>) return "coherent";
        if constexpr (std::is_same_v<T, PhaseCoherent>) return "phase-coherent";
        if constexpr (std::is_same_v<T, SqueezedCoherent>) return "squeezed";
        if constexpr (std::is_same_v<T, TruncatedLondon>) return "london";
        return "custom";
      },
      spec);
}

}  // namespace phasebound
