#pragma once
// Internal glue shared by the experiment implementations. Not installed.

#include <chrono>
#include <string>
#include <vector>

#include "displab/experiments/manifest.hpp"
#include "displab/experiments/slope_fit.hpp"
#include "displab/experiments/suites.hpp"
#include "displab/util/io.hpp"

namespace displab::suites {

ExperimentResult run_loc_ratio(const nlohmann::json&, const ExperimentContext&);
ExperimentResult run_bo_instability(const nlohmann::json&,
                                    const ExperimentContext&);
ExperimentResult run_burgers_instability(const nlohmann::json&,
                                         const ExperimentContext&);
ExperimentResult run_residual_scaling(const nlohmann::json&,
                                      const ExperimentContext&);
ExperimentResult run_bona_smith(const nlohmann::json&,
                                const ExperimentContext&);
ExperimentResult run_energy_estimate(const nlohmann::json&,
                                     const ExperimentContext&);
ExperimentResult run_kato_ponce(const nlohmann::json&,
                                const ExperimentContext&);
ExperimentResult run_strichartz(const nlohmann::json&,
                                const ExperimentContext&);
ExperimentResult run_nls_decoherence(const nlohmann::json&,
                                     const ExperimentContext&);

// Bookkeeping each run function threads through: accumulates the manifest,
// renders plots, and writes everything out once the checks are in.
class SuiteIo {
 public:
  SuiteIo(const std::string& name, const nlohmann::json& cfg,
          const ExperimentContext& ctx)
      : dir_(ctx.out), t0_(std::chrono::steady_clock::now()) {
    manifest_.experiment = name;
    manifest_.version = kLibraryVersion;
    manifest_.seed = ctx.seed;
    manifest_.budget_mib = ctx.budget_mib;
    manifest_.strict = ctx.strict;
    manifest_.config = cfg;
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }
  void note_grid(const std::string& g) { manifest_.grids.push_back(g); }

  // The CSV named in `p` must already exist under the run directory.
  void plot(const PlotDescriptor& p) {
    render_plot(dir_, p);
    manifest_.plots.push_back(p);
  }

  void fit_json(const std::string& rel, const SlopeFit& f) {
    nlohmann::json j{{"slope", f.slope},
                     {"intercept", f.intercept},
                     {"residual_rms", f.residual_rms},
                     {"predicted", f.predicted},
                     {"tolerance", f.tolerance},
                     {"pass", f.pass},
                     {"valid", f.valid},
                     {"x", f.x},
                     {"log_y", f.logy}};
    const std::filesystem::path path = dir_ / rel;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << j.dump(2) << '\n';
  }

  void finish(ExperimentResult& r) {
    manifest_.checks = nlohmann::json::object();
    for (const CheckResult& c : r.checks)
      manifest_.checks[c.name] = {{"pass", c.pass}, {"detail", c.detail}};
    manifest_.guard_reason = r.guard_reason;
    manifest_.partial = r.guard_tripped;
    manifest_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
    write_manifest(dir_, manifest_);
  }

 private:
  std::filesystem::path dir_;
  RunManifest manifest_;
  std::chrono::steady_clock::time_point t0_;
};

inline void add_check(ExperimentResult& r, const std::string& name, bool pass,
                      const std::string& detail) {
  r.checks.push_back({name, pass, detail});
}

inline std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

inline std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

inline std::string fmt(const char* f, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

}  // namespace displab::suites
