#include "displab/experiments/report.hpp"

#include <cstdio>

#include "displab/experiments/manifest.hpp"
#include "displab/util/io.hpp"

namespace displab {

bool render_report(const std::filesystem::path& dir, std::ostream& out) {
  if (!std::filesystem::exists(dir) || std::filesystem::is_empty(dir)) {
    out << "no data at " << dir.string() << "\n";
    return false;
  }
  const RunManifest m = read_manifest(dir);

  for (const PlotDescriptor& p : m.plots) render_plot(dir, p);

  out << m.experiment << "  (library " << m.version << ")\n";
  out << "seed " << m.seed;
  if (m.strict) out << ", strict";
  if (m.partial) out << ", PARTIAL RUN";
  out << "\n";
  out << "config " << m.config.dump() << "\n";
  for (const std::string& g : m.grids) out << "  " << g << "\n";
  for (const auto& item : m.checks.items()) {
    const bool pass = item.value().at("pass").get<bool>();
    out << (pass ? "  [ ok ] " : "  [FAIL] ") << item.key() << ": "
        << item.value().at("detail").get<std::string>() << "\n";
  }
  if (!m.guard_reason.empty()) out << "  guard: " << m.guard_reason << "\n";

  // The stored checksums cover the CSVs and the plots just re-rendered; any
  // mismatch means the directory was edited or the render drifted.
  std::size_t bad = 0;
  for (const auto& item : m.checksums.items()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(
                      fnv1a64_file(dir / item.key())));
    if (item.value().get<std::string>() != buf) {
      out << "  [FAIL] checksum mismatch: " << item.key() << "\n";
      ++bad;
    }
  }
  out << m.plots.size() << " plots re-rendered, "
      << m.checksums.size() - bad << "/" << m.checksums.size()
      << " checksums verified\n";
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.1f", m.wall_seconds);
  out << "recorded wall time " << wall << " s\n";
  return true;
}

}  // namespace displab
