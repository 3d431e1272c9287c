#include "displab/experiments/suites.hpp"

#include <stdexcept>

#include "suite_impl.hpp"

namespace displab {

using nlohmann::json;

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> table = {
      {"loc-ratio",
       "high-frequency Sobolev fraction of modulated bumps across carrier "
       "frequencies",
       json{{"s", 1.0},
            {"delta", 0.6},
            {"alphas", json::array({0.0, 1.0})},
            {"lambdas", json::array({64.0, 128.0, 256.0, 512.0})},
            {"bump_inner", 1.0},
            {"bump_outer", 2.0}},
       suites::run_loc_ratio},

      {"bo-instability",
       "separation of Benjamin-Ono wave-packet pairs started on opposite "
       "pedestals",
       json{{"s", 1.0},
            {"delta", 0.5},
            {"omega", 1.0},
            {"ansatz_lambdas", json::array({64.0, 128.0, 256.0})},
            {"t_end", 1.0},
            {"pedestal_dt", 5e-3},
            {"curve_points", 40},
            {"evolve", true},
            {"evolve_lambda", 64.0},
            {"evolve_dt", 1e-3},
            {"ansatz_tol", 0.05},
            {"evolve_tol", 0.15}},
       suites::run_bo_instability},

      {"burgers-instability",
       "separation of Burgers wave-packet pairs riding opposite pedestals",
       json{{"s", 1.6},
            {"delta", 1.2},
            {"omega", 1.0},
            {"lambdas", json::array({32.0, 64.0, 128.0})},
            {"t_end", 1.0},
            {"curve_points", 40},
            {"evolve", true},
            {"evolve_lambda", 32.0},
            {"evolve_dt", 1e-3},
            {"ansatz_tol", 0.05},
            {"evolve_tol", 0.15}},
       suites::run_burgers_instability},

      {"residual-scaling",
       "decay rates of the wave-packet ansatz residuals in the carrier "
       "frequency",
       json{{"bo_s", 1.0},
            {"bo_delta", 0.5},
            {"bo_omega_coeff", 0.1},
            {"bo_lambdas", json::array({32.0, 64.0, 128.0, 256.0})},
            {"bo_time", 0.5},
            {"pedestal_dt", 5e-3},
            {"burgers_s", 1.6},
            {"burgers_delta", 1.2},
            {"burgers_omega", 1.0},
            {"burgers_lambdas", json::array({32.0, 64.0, 128.0, 256.0})},
            {"burgers_time", 0.5},
            {"slope_tol", 0.2}},
       suites::run_residual_scaling},

      {"bona-smith",
       "sensitivity of Burgers flows to spectral smoothing of rough data",
       json{{"s", 2.0},
            {"nodes", 4096},
            {"length", 6.283185307179586},
            {"amplitude", 0.5},
            {"tail_exponent", 0.75},
            {"epsilons", json::array({1e-1, 3e-2, 1e-2, 3e-3})},
            {"t_end", 0.5},
            {"dt", 2e-4},
            {"limit_band", 8.0}},
       suites::run_bona_smith},

      {"energy-estimate",
       "growth-bound constants for Sobolev norms along Burgers flows",
       json{{"s_values", json::array({1.6, 2.0})},
            {"amplitudes", json::array({0.25, 0.5, 1.0, 2.0})},
            {"nodes", 1024},
            {"length", 6.283185307179586},
            {"horizon_fraction", 0.7},
            {"dt", 5e-4}},
       suites::run_energy_estimate},

      {"kato-ponce-survey",
       "commutator-estimate constants over random band-limited pairs",
       json{{"s_values", json::array({1.6, 2.0, 3.0})},
            {"samples", 200},
            {"nodes", 512},
            {"length", 6.283185307179586},
            {"band", 64.0},
            {"decay", 1.0}},
       suites::run_kato_ponce},

      {"strichartz-survey",
       "space-time norm ratios of free dispersive flows over random data",
       json{{"pairs_1d", json::array({json::array({6.0, 6.0})})},
            {"pairs_2d", json::array({json::array({4.0, 4.0})})},
            {"samples", 50},
            {"time_samples", 64},
            {"t_end", 1.0},
            {"nodes_1d", 1024},
            {"length_1d", 201.06192982974676},
            {"nodes_2d", 128},
            {"length_2d", 50.26548245743669},
            {"band", 16.0}},
       suites::run_strichartz},

      {"nls-decoherence-torus",
       "phase decoherence of concentrated cubic Schrodinger pairs on a small "
       "torus",
       json{{"d", 1},
            {"s", -0.25},
            {"n", 64.0},
            {"l", 1},
            {"delta1", 0.06},
            {"delta2", 0.30},
            {"kappa", 3.0},
            {"kappa_prime", 2.55},
            {"dt", 1e-5},
            {"nodes", 4096},
            {"sample_stride", 5},
            {"focusing", 1}},
       suites::run_nls_decoherence},
  };
  return table;
}

const ExperimentInfo& find_experiment(const std::string& name) {
  for (const ExperimentInfo& e : experiment_registry())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown experiment: " + name);
}

json merge_config(const json& defaults, const json& user) {
  if (!user.is_object())
    throw std::invalid_argument("config must be a JSON object");
  json out = defaults;
  for (const auto& item : user.items()) {
    if (!defaults.contains(item.key()))
      throw std::invalid_argument("unknown config field: " + item.key());
    out[item.key()] = item.value();
  }
  return out;
}

}  // namespace displab
