#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasebound/bounds.hpp"
#include "phasebound/decision.hpp"
#include "phasebound/fock.hpp"
#include "phasebound/sim.hpp"
#include "phasebound/states.hpp"

namespace py = pybind11;
using namespace phasebound;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum limits on interferometric phase detection";

  py::register_exception<NotDetectableError>(m, "NotDetectableError");
  py::register_exception<DegenerateRegimeError>(m, "DegenerateRegimeError");
  py::register_exception<TruncationCapError>(m, "TruncationCapError");

  py::class_<Moments>(m, "Moments")
      .def_readonly("mean", &Moments::mean)
      .def_readonly("variance", &Moments::variance);

  py::class_<FockDistribution>(m, "FockDistribution")
      .def_property_readonly("probs", &FockDistribution::probs)
      .def_property_readonly("dim", &FockDistribution::dim)
      .def_property_readonly("tail_estimate", &FockDistribution::tail_estimate);

  m.def("build_distribution", &build_distribution, py::arg("weights"),
        py::arg("tail_tol") = kDefaultTailTol, py::arg("tail_estimate") = 0.0);
  m.def("overlap_kappa", &overlap_kappa, py::arg("dist"), py::arg("phi"));
  m.def("moments", &moments, py::arg("dist"));
  m.def("quadratic_overlap", &quadratic_overlap, py::arg("dist"),
        py::arg("phi"));

  m.def("coherent_distribution", &coherent_distribution, py::arg("alpha"),
        py::arg("tail_tol") = kDefaultTailTol);
  m.def("phase_coherent_distribution", &phase_coherent_distribution,
        py::arg("x"), py::arg("tail_tol") = kDefaultTailTol);
  m.def("squeezed_distribution", &squeezed_distribution, py::arg("x"),
        py::arg("r"), py::arg("tail_tol") = kDefaultTailTol);
  m.def("truncated_london_distribution", &truncated_london_distribution,
        py::arg("dim"));
  m.def(
      "distribution_from_spec",
      [](const std::string& text, double tail_tol) {
        return distribution_from_spec(parse_state_spec(text), tail_tol);
      },
      py::arg("spec"), py::arg("tail_tol") = kDefaultTailTol,
      "Builds a distribution from the canonical textual state spec.");

  py::class_<ROCPoint>(m, "ROCPoint")
      .def_readonly("p01", &ROCPoint::p01)
      .def_readonly("p11", &ROCPoint::p11)
      .def_readonly("lambda_", &ROCPoint::lambda)
      .def_readonly("has_lambda", &ROCPoint::has_lambda);

  py::class_<PhiMinResult>(m, "PhiMinResult")
      .def_readonly("phi_min", &PhiMinResult::phi_min)
      .def_readonly("kappa_star", &PhiMinResult::kappa_star)
      .def_readonly("bracket", &PhiMinResult::bracket);

  m.def("detection_probability", &detection_probability, py::arg("kappa"),
        py::arg("p01"));
  m.def("kappa_threshold", &kappa_threshold, py::arg("p01"));
  m.def("eigen_oracle_point", &eigen_oracle_point, py::arg("c"),
        py::arg("lambda_"));
  m.def("roc_analytic", &roc_analytic, py::arg("kappa"), py::arg("p01_grid"));
  m.def("roc_from_oracle", &roc_from_oracle, py::arg("c"),
        py::arg("lambda_grid"));
  m.def("default_lambda_grid", &default_lambda_grid, py::arg("points") = 400);
  m.def("min_detectable_phase", &min_detectable_phase, py::arg("dist"),
        py::arg("p01"), py::arg("phi_max") = 3.14159265358979323846,
        py::arg("grid_points") = 4096);

  py::class_<BetaScanResult>(m, "BetaScanResult")
      .def_readonly("beta_star", &BetaScanResult::beta_star)
      .def_readonly("phi_at_beta_star", &BetaScanResult::phi_at_beta_star)
      .def_readonly("samples", &BetaScanResult::samples);
  m.def("optimal_squeezing_fraction", &optimal_squeezing_fraction,
        py::arg("n"), py::arg("p01"));

  py::class_<SimResult>(m, "SimResult")
      .def_readonly("trials", &SimResult::trials)
      .def_readonly("positives", &SimResult::positives)
      .def_readonly("rate", &SimResult::rate)
      .def_readonly("ci_low", &SimResult::ci_low)
      .def_readonly("ci_high", &SimResult::ci_high)
      .def_readonly("seed", &SimResult::seed);
  m.def(
      "simulate_strategy",
      [](double c, double lambda, const std::string& hypothesis,
         std::uint64_t trials, std::uint64_t seed) {
        return simulate_strategy(c, lambda, parse_hypothesis(hypothesis),
                                 trials, seed);
      },
      py::arg("c"), py::arg("lambda_"), py::arg("hypothesis"),
      py::arg("trials"), py::arg("seed") = 0);

  py::class_<ScalingFit>(m, "ScalingFit")
      .def_readonly("slope", &ScalingFit::slope)
      .def_readonly("intercept", &ScalingFit::intercept)
      .def_readonly("r_squared", &ScalingFit::r_squared)
      .def_readonly("n_points", &ScalingFit::n_points);

  m.def("shot_noise_bound", &shot_noise_bound, py::arg("n"), py::arg("p01"));
  m.def("fluctuation_bound", &fluctuation_bound, py::arg("delta_n"),
        py::arg("p01"));
  m.def("corrected_fluctuation_bound", &corrected_fluctuation_bound,
        py::arg("delta_n"), py::arg("p01"));
  m.def("phase_coherent_bound", &phase_coherent_bound, py::arg("n"),
        py::arg("p01"));
  m.def("squeezed_bound", &squeezed_bound, py::arg("n"), py::arg("beta"),
        py::arg("p01"));
  m.def("fit_power_law", &fit_power_law, py::arg("points"));
}
