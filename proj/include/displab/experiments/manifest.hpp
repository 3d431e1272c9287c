#pragma once
// Run manifests.  Every experiment run leaves a manifest.json in its output
// directory recording the resolved configuration, the library version, the
// checksums of every file it wrote and the pass/fail verdicts, so a finished
// directory is self-describing and a re-run is checkable bit for bit against
// it.  Wall time is recorded but never checksummed.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace displab {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct PlotDescriptor {
  std::string svg;                  // path relative to the run directory
  std::string csv;                  // source series, relative
  std::string x;                    // column holding the abscissa
  std::vector<std::string> ys;      // columns to draw
  std::string title, xlabel, ylabel;
  bool logx = false, logy = false;
};

struct RunManifest {
  std::string experiment;
  std::string version = kLibraryVersion;
  std::uint64_t seed = 0;
  double budget_mib = 2048.0;
  bool strict = false;
  nlohmann::json config;  // resolved parameter set
  std::vector<std::string> grids;
  std::vector<PlotDescriptor> plots;
  nlohmann::json checks;  // name -> {pass, detail}
  std::string guard_reason;
  bool partial = false;
  double wall_seconds = 0.0;
  nlohmann::json checksums;  // relative path -> fnv1a64 hex
};

// Checksums every file under series/, fits/ and plots/ below `dir`, fills
// manifest.checksums, and writes dir/manifest.json.
void write_manifest(const std::filesystem::path& dir, RunManifest& m);

// Loads dir/manifest.json; throws std::runtime_error when absent or broken.
RunManifest read_manifest(const std::filesystem::path& dir);

// Renders one plot from its stored CSV into run_dir/<descriptor.svg>. The
// run path and `report` both go through here, so a re-render reproduces the
// original bytes.
void render_plot(const std::filesystem::path& run_dir,
                 const PlotDescriptor& p);

}  // namespace displab
