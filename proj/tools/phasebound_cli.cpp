// phasebound: quantum limits on interferometric phase detection, viewed as a
// binary decision problem. Subcommands emit deterministic CSV/JSON.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phasebound/bounds.hpp"
#include "phasebound/decision.hpp"
#include "phasebound/fock.hpp"
#include "phasebound/sim.hpp"
#include "phasebound/states.hpp"

namespace pb = phasebound;

namespace {

constexpr double kPi = 3.14159265358979323846;

// 17 significant digits: round-trippable and stable for golden files.
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_num(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "null";
  return fmt17(*v);
}

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot open output file '" + path + "'");
    }
    f << content;
  }
};

struct StateArgs {
  std::string state_text;
  std::string family;
  double n = -1.0;
  double beta = -1.0;

  pb::StateSpec resolve() const {
    if (!state_text.empty()) {
      return pb::parse_state_spec(state_text);
    }
    if (family.empty() || n < 0.0) {
      throw std::invalid_argument(
          "either --state or --family with --n is required");
    }
    pb::Family fam;
    if (family == "coherent") {
      fam = pb::Family::kCoherent;
    } else if (family == "phase-coherent") {
      fam = pb::Family::kPhaseCoherent;
    } else if (family == "squeezed") {
      fam = pb::Family::kSqueezedCoherent;
    } else if (family == "london") {
      fam = pb::Family::kLondon;
    } else {
      throw std::invalid_argument("unknown family '" + family + "'");
    }
    return pb::params_from_budget(fam, n, beta);
  }
};

std::string params_json(const pb::StateSpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, pb::Coherent>) {
          os << "{\"alpha\": " << fmt17(s.alpha) << "}";
        } else if constexpr (std::is_same_v<T, pb::PhaseCoherent>) {
          os << "{\"x\": " << fmt17(s.x) << "}";
        } else if constexpr (std::is_same_v<T, pb::SqueezedCoherent>) {
          os << "{\"x\": " << fmt17(s.x) << ", \"r\": " << fmt17(s.r) << "}";
        } else if constexpr (std::is_same_v<T, pb::TruncatedLondon>) {
          os << "{\"dim\": " << s.dim << "}";
        } else {
          os << "{\"weights\": " << s.weights.size() << "}";
        }
      },
      spec);
  return os.str();
}

// Published closed-form bound matching the family, when one exists.
std::optional<double> paper_bound(const pb::StateSpec& spec, double n,
                                  double delta_n, double p01) {
  try {
    if (std::holds_alternative<pb::Coherent>(spec)) {
      return pb::shot_noise_bound(n, p01);
    }
    if (std::holds_alternative<pb::PhaseCoherent>(spec)) {
      return pb::phase_coherent_bound(n, p01);
    }
    if (const auto* s = std::get_if<pb::SqueezedCoherent>(&spec)) {
      const double sh2 = std::sinh(s->r) * std::sinh(s->r);
      const double beta = n > 0.0 ? sh2 / n : 0.0;
      return pb::squeezed_bound(n, beta, p01);
    }
    return pb::fluctuation_bound(delta_n, p01);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<double> corrected_bound(double delta_n, double p01) {
  if (delta_n <= 0.0) return std::nullopt;
  return pb::corrected_fluctuation_bound(delta_n, p01);
}

struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  bool log_spaced = true;

  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0
                                  : static_cast<double>(i) /
                                        static_cast<double>(count - 1);
      v.push_back(log_spaced ? lo * std::pow(hi / lo, t)
                             : lo + (hi - lo) * t);
    }
    return v;
  }
};

SweepRange parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4 || (parts[3] != "log" && parts[3] != "lin")) {
    throw std::invalid_argument(
        "range must be lo:hi:count:log|lin, got '" + text + "'");
  }
  SweepRange r;
  r.lo = std::stod(parts[0]);
  r.hi = std::stod(parts[1]);
  r.count = static_cast<std::size_t>(std::stoul(parts[2]));
  r.log_spaced = parts[3] == "log";
  if (!(r.lo > 0.0) || !(r.hi >= r.lo) || r.count < 1) {
    throw std::invalid_argument("bad range '" + text + "'");
  }
  return r;
}

int run_roc(const StateArgs& state, double phi, std::size_t points,
            const std::string& format, double tail_tol,
            const OutputTarget& out) {
  const pb::StateSpec spec = state.resolve();
  const pb::FockDistribution dist = pb::distribution_from_spec(spec, tail_tol);
  const double kappa = pb::overlap_kappa(dist, phi);
  const double c = std::sqrt(kappa);

  std::vector<pb::ROCPoint> pts =
      pb::roc_from_oracle(c, pb::default_lambda_grid(points));
  std::stable_sort(pts.begin(), pts.end(),
                   [](const pb::ROCPoint& a, const pb::ROCPoint& b) {
                     return a.p01 < b.p01;
                   });

  std::ostringstream os;
  if (format == "json") {
    os << "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      os << (i ? ",\n " : "\n ") << "{\"p01\": " << fmt17(p.p01)
         << ", \"p11_analytic\": "
         << fmt17(pb::detection_probability(kappa, p.p01))
         << ", \"p11_oracle\": " << fmt17(p.p11)
         << ", \"lambda\": " << fmt17(p.lambda)
         << ", \"kappa\": " << fmt17(kappa) << "}";
    }
    os << "\n]\n";
  } else {
    os << "p01,p11_analytic,p11_oracle,lambda,kappa\n";
    for (const auto& p : pts) {
      os << fmt17(p.p01) << ","
         << fmt17(pb::detection_probability(kappa, p.p01)) << ","
         << fmt17(p.p11) << "," << fmt17(p.lambda) << "," << fmt17(kappa)
         << "\n";
    }
  }
  out.write(os.str());
  return 0;
}

int run_phimin(const StateArgs& state, double p01, double phi_max,
               std::size_t grid, double tail_tol, const OutputTarget& out) {
  const pb::StateSpec spec = state.resolve();
  const pb::FockDistribution dist = pb::distribution_from_spec(spec, tail_tol);
  const pb::Moments mom = pb::moments(dist);
  const double delta_n = std::sqrt(mom.variance);

  std::optional<pb::PhiMinResult> res;
  try {
    res = pb::min_detectable_phase(dist, p01, phi_max, grid);
  } catch (const pb::NotDetectableError&) {
    out.write("{\"error\": \"not_detectable\"}\n");
    return 4;
  }

  std::ostringstream os;
  os << "{\"family\": \"" << pb::family_name(spec) << "\""
     << ", \"params\": " << params_json(spec)
     << ", \"N\": " << fmt17(mom.mean) << ", \"p01\": " << fmt17(p01)
     << ", \"kappa_star\": " << fmt17(res->kappa_star)
     << ", \"phi_min_exact\": " << fmt17(res->phi_min)
     << ", \"phi_min_paper_bound\": "
     << json_num(paper_bound(spec, mom.mean, delta_n, p01))
     << ", \"phi_min_corrected_bound\": "
     << json_num(corrected_bound(delta_n, p01)) << "}\n";
  out.write(os.str());
  return 0;
}

int run_sweep(const StateArgs& state, const std::string& range_text,
              double p01, std::size_t grid, double tail_tol,
              const OutputTarget& out) {
  const SweepRange range = parse_range(range_text);

  std::ostringstream os;
  os << "n,phi_exact,phi_paper,phi_corrected\n";
  std::vector<std::pair<double, double>> fit_points;
  for (double n : range.values()) {
    StateArgs point = state;
    point.n = n;
    const pb::StateSpec spec = point.resolve();
    const pb::FockDistribution dist =
        pb::distribution_from_spec(spec, tail_tol);
    const pb::Moments mom = pb::moments(dist);
    const double delta_n = std::sqrt(mom.variance);
    const pb::PhiMinResult res =
        pb::min_detectable_phase(dist, p01, kPi, grid);
    fit_points.emplace_back(n, res.phi_min);
    os << fmt17(n) << "," << fmt17(res.phi_min) << ","
       << json_num(paper_bound(spec, mom.mean, delta_n, p01)) << ","
       << json_num(corrected_bound(delta_n, p01)) << "\n";
  }
  const pb::ScalingFit fit = pb::fit_power_law(fit_points);
  os << "{\"slope\": " << fmt17(fit.slope)
     << ", \"intercept\": " << fmt17(fit.intercept)
     << ", \"r_squared\": " << fmt17(fit.r_squared)
     << ", \"n_points\": " << fit.n_points << "}\n";
  out.write(os.str());
  return 0;
}

int run_beta_scan(double n, double p01, const OutputTarget& out) {
  const pb::BetaScanResult scan = pb::optimal_squeezing_fraction(n, p01);
  std::ostringstream os;
  os << "beta,phi_exact,phi_paper_bound\n";
  for (const auto& [beta, phi] : scan.samples) {
    std::optional<double> paper;
    if (beta > 0.0 && beta < 1.0) {
      paper = pb::squeezed_bound(n, beta, p01);
    }
    os << fmt17(beta) << "," << fmt17(phi) << "," << json_num(paper) << "\n";
  }
  os << "{\"beta_star\": " << fmt17(scan.beta_star)
     << ", \"phi_at_beta_star\": " << fmt17(scan.phi_at_beta_star) << "}\n";
  out.write(os.str());
  return 0;
}

int run_simulate(double c, const StateArgs& state, double phi, double lambda,
                 const std::string& hypothesis, std::uint64_t trials,
                 std::uint64_t seed, double tail_tol,
                 const OutputTarget& out) {
  double c_eff = c;
  if (c_eff < 0.0) {
    const pb::StateSpec spec = state.resolve();
    const pb::FockDistribution dist =
        pb::distribution_from_spec(spec, tail_tol);
    c_eff = std::sqrt(pb::overlap_kappa(dist, phi));
  }
  const pb::SimResult res = pb::simulate_strategy(
      c_eff, lambda, pb::parse_hypothesis(hypothesis), trials, seed);
  std::ostringstream os;
  os << "{\"trials\": " << res.trials << ", \"positives\": " << res.positives
     << ", \"rate\": " << fmt17(res.rate)
     << ", \"ci_low\": " << fmt17(res.ci_low)
     << ", \"ci_high\": " << fmt17(res.ci_high) << ", \"seed\": " << res.seed
     << ", \"hypothesis\": \"" << pb::hypothesis_name(res.hypothesis)
     << "\"}\n";
  out.write(os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum limits on interferometric phase detection via binary decision "
      "theory"};
  app.require_subcommand(1);

  // shared flags
  StateArgs state;
  OutputTarget out;
  double tail_tol = pb::kDefaultTailTol;
  double p01 = 0.0;
  std::size_t grid = 4096;

  auto add_state_flags = [&](CLI::App* cmd, bool with_beta = true) {
    cmd->add_option("--state", state.state_text,
                    "state spec, e.g. coherent:alpha=1.0 or custom:@w.csv");
    cmd->add_option("--family", state.family,
                    "coherent|phase-coherent|squeezed|london");
    cmd->add_option("--n", state.n, "mean photon number budget N");
    if (with_beta) {
      cmd->add_option("--beta", state.beta,
                      "squeezing fraction (squeezed family only)");
    }
  };
  std::string config_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out.path, "output file (default: stdout)");
    cmd->add_option("--tail-tol", tail_tol, "truncation tail tolerance");
    cmd->add_option("--config", config_path,
                    "key=value config file; explicit flags take precedence");
  };

  // roc
  auto* roc = app.add_subcommand("roc", "ROC curve for a state at a phase");
  double phi = 0.0;
  std::size_t points = 400;
  std::string format = "csv";
  add_state_flags(roc);
  roc->add_option("--phi", phi, "phase shift in (0, pi]")->required();
  roc->add_option("--points", points, "number of lambda-grid points");
  roc->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(roc);

  // phimin
  auto* phimin =
      app.add_subcommand("phimin", "minimum detectable phase shift");
  double phi_max = kPi;
  add_state_flags(phimin);
  phimin->add_option("--p01", p01, "false alarm budget, [0, 0.5)");
  phimin->add_option("--phi-max", phi_max, "scan upper limit, (0, pi]");
  phimin->add_option("--grid", grid, "phase scan resolution");
  add_common(phimin);

  // sweep
  auto* sweep =
      app.add_subcommand("sweep", "phi_M vs N sweep with scaling fit");
  std::string n_range;
  add_state_flags(sweep);
  sweep->add_option("--n-range", n_range, "lo:hi:count:log|lin")->required();
  sweep->add_option("--p01", p01, "false alarm budget, [0, 0.5)");
  sweep->add_option("--grid", grid, "phase scan resolution");
  add_common(sweep);

  // beta-scan
  auto* beta_scan = app.add_subcommand(
      "beta-scan", "phi_M vs squeezing fraction at fixed budget");
  double scan_n = 0.0;
  beta_scan->add_option("--n", scan_n, "mean photon number budget N")
      ->required();
  beta_scan->add_option("--p01", p01, "false alarm budget, [0, 0.5)");
  add_common(beta_scan);

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "Monte-Carlo run of the decision rule");
  double sim_c = -1.0;
  double sim_phi = 0.0;
  double lambda = 0.0;
  std::string hypothesis;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  add_state_flags(simulate, false);
  simulate->add_option("--c", sim_c, "overlap modulus |<psi0|psi1>|");
  simulate->add_option("--phi", sim_phi, "phase shift (with --state)");
  simulate->add_option("--lambda", lambda, "Lagrange multiplier")->required();
  simulate->add_option("--hypothesis", hypothesis, "H0|H1")->required();
  simulate->add_option("--trials", trials, "number of trials")->required();
  simulate->add_option("--seed", seed, "RNG seed (default 0)");
  add_common(simulate);

  // Config-file support: key=value lines mirroring the active subcommand's
  // flags. Keys already present on the command line keep their values.
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] != "--config") continue;
      std::ifstream cfg(args[i + 1]);
      if (!cfg) {
        std::cerr << "error: cannot open config file '" << args[i + 1]
                  << "'\n";
        return 2;
      }
      std::string line;
      while (std::getline(cfg, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: bad config line '" << line << "'\n";
          return 2;
        }
        const std::string flag = "--" + line.substr(0, eq);
        if (std::find(args.begin(), args.end(), flag) == args.end()) {
          args.push_back(flag);
          args.push_back(line.substr(eq + 1));
        }
      }
      break;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<char*> cargs;
  cargs.reserve(args.size() + 1);
  std::string prog = argv[0];
  cargs.push_back(prog.data());
  for (auto& a : args) cargs.push_back(a.data());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    app.exit(e);
    return 2;
  }

  try {
    if (roc->parsed()) {
      return run_roc(state, phi, points, format, tail_tol, out);
    }
    if (phimin->parsed()) {
      return run_phimin(state, p01, phi_max, grid, tail_tol, out);
    }
    if (sweep->parsed()) {
      return run_sweep(state, n_range, p01, grid, tail_tol, out);
    }
    if (beta_scan->parsed()) {
      return run_beta_scan(scan_n, p01, out);
    }
    if (simulate->parsed()) {
      return run_simulate(sim_c, state, sim_phi, lambda, hypothesis, trials,
                          seed, tail_tol, out);
    }
  } catch (const pb::NotDetectableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
