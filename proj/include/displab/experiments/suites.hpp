#pragma once
// Experiment registry. Each experiment is a named, self-describing driver:
// it takes a merged JSON config plus an output context, writes CSV series,
// slope-fit JSON files and SVG plots under the output directory, and returns
// a list of named pass/fail checks. The CLI and the acceptance harness both
// go through this table, so the set of names here is the public surface.
//
// Determinism contract: a run is a pure function of (config, seed). All
// randomness flows through one std::mt19937_64 seeded from the context, all
// dispatch is sequential, and CSV output uses a fixed 17-digit format, so
// repeating a run reproduces every byte under series/ and fits/.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace displab {

struct ExperimentContext {
  std::filesystem::path out;
  std::uint64_t seed = 0;
  double budget_mib = 2048.0;  // largest grids are skipped when over budget
  bool strict = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentResult {
  std::vector<CheckResult> checks;
  bool guard_tripped = false;
  std::string guard_reason;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return !guard_tripped;
  }
};

using RunFn = std::function<ExperimentResult(const nlohmann::json&,
                                             const ExperimentContext&)>;

struct ExperimentInfo {
  std::string name;
  std::string summary;
  nlohmann::json defaults;
  RunFn run;
};

// Stable-ordered table of all experiments; `list` prints it verbatim.
const std::vector<ExperimentInfo>& experiment_registry();

// Throws std::invalid_argument when the name is unknown.
const ExperimentInfo& find_experiment(const std::string& name);

// Overlays `user` onto `defaults`. Any key absent from the defaults is a
// typo as far as we are concerned and raises std::invalid_argument, naming
// the offending field.
nlohmann::json merge_config(const nlohmann::json& defaults,
                            const nlohmann::json& user);

// Uniform double in [0,1) from the top 53 bits of the engine output. The
// engine itself is fully specified by the standard; the distribution adapters
// are not, so we map by hand to keep runs identical across toolchains.
inline double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace displab
