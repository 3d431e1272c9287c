#include "displab/experiments/manifest.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "displab/experiments/svg.hpp"
#include "displab/util/io.hpp"

namespace displab {
namespace {

nlohmann::json plot_to_json(const PlotDescriptor& p) {
  return nlohmann::json{{"svg", p.svg},       {"csv", p.csv},
                        {"x", p.x},           {"ys", p.ys},
                        {"title", p.title},   {"xlabel", p.xlabel},
                        {"ylabel", p.ylabel}, {"logx", p.logx},
                        {"logy", p.logy}};
}

PlotDescriptor plot_from_json(const nlohmann::json& j) {
  PlotDescriptor p;
  p.svg = j.at("svg").get<std::string>();
  p.csv = j.at("csv").get<std::string>();
  p.x = j.at("x").get<std::string>();
  p.ys = j.at("ys").get<std::vector<std::string>>();
  p.title = j.at("title").get<std::string>();
  p.xlabel = j.at("xlabel").get<std::string>();
  p.ylabel = j.at("ylabel").get<std::string>();
  p.logx = j.at("logx").get<bool>();
  p.logy = j.at("logy").get<bool>();
  return p;
}

}  // namespace

void write_manifest(const std::filesystem::path& dir, RunManifest& m) {
  // deterministic checksum listing: sorted relative paths
  std::vector<std::string> files;
  for (const char* sub : {"series", "fits", "plots"}) {
    const std::filesystem::path p = dir / sub;
    if (!std::filesystem::exists(p)) continue;
    for (const auto& e : std::filesystem::directory_iterator(p))
      if (e.is_regular_file())
        files.push_back(std::string(sub) + "/" + e.path().filename().string());
  }
  std::sort(files.begin(), files.end());
  m.checksums = nlohmann::json::object();
  for (const std::string& f : files) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64_file(dir / f)));
    m.checksums[f] = buf;
  }

  nlohmann::json j;
  j["experiment"] = m.experiment;
  j["version"] = m.version;
  j["seed"] = m.seed;
  j["budget_mib"] = m.budget_mib;
  j["strict"] = m.strict;
  j["config"] = m.config;
  j["grids"] = m.grids;
  nlohmann::json plots = nlohmann::json::array();
  for (const PlotDescriptor& p : m.plots) plots.push_back(plot_to_json(p));
  j["plots"] = plots;
  j["checks"] = m.checks;
  j["guard_reason"] = m.guard_reason;
  j["partial"] = m.partial;
  j["wall_seconds"] = m.wall_seconds;
  j["checksums"] = m.checksums;

  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + (dir / "manifest.json").string());
  out << j.dump(2) << '\n';
}

void render_plot(const std::filesystem::path& run_dir,
                 const PlotDescriptor& p) {
  const CsvTable t = read_csv(run_dir / p.csv);
  const std::vector<double>& x = t.column(p.x);
  std::vector<SvgSeries> series;
  for (const std::string& name : p.ys) series.push_back({name, x, t.column(name)});
  SvgPlotSpec spec;
  spec.title = p.title;
  spec.xlabel = p.xlabel;
  spec.ylabel = p.ylabel;
  spec.logx = p.logx;
  spec.logy = p.logy;
  std::filesystem::create_directories((run_dir / p.svg).parent_path());
  write_svg_plot(run_dir / p.svg, spec, series);
}

RunManifest read_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json", std::ios::binary);
  if (!in)
    throw std::runtime_error("no manifest.json under " + dir.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("corrupt manifest: " + std::string(e.what()));
  }
  RunManifest m;
  m.experiment = j.at("experiment").get<std::string>();
  m.version = j.at("version").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.budget_mib = j.at("budget_mib").get<double>();
  m.strict = j.at("strict").get<bool>();
  m.config = j.at("config");
  m.grids = j.at("grids").get<std::vector<std::string>>();
  for (const auto& p : j.at("plots")) m.plots.push_back(plot_from_json(p));
  m.checks = j.at("checks");
  m.guard_reason = j.at("guard_reason").get<std::string>();
  m.partial = j.at("partial").get<bool>();
  m.wall_seconds = j.at("wall_seconds").get<double>();
  m.checksums = j.at("checksums");
  return m;
}

}  // namespace displab
