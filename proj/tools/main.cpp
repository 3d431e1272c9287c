// Command-line front end: `run` executes one experiment into an output
// directory, `list` prints the registry, `report` re-renders a finished run.
//
// Exit codes: 0 success, 1 internal error, 2 invalid usage or config,
// 3 guard trip (or, under --strict, any failing check).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "displab/experiments/report.hpp"
#include "displab/experiments/suites.hpp"

namespace {

int cmd_list() {
  for (const displab::ExperimentInfo& e : displab::experiment_registry())
    std::printf("%-24s %s\n", e.name.c_str(), e.summary.c_str());
  return 0;
}

int cmd_run(const std::string& name, const std::string& config_path,
            std::string out_dir, std::uint64_t seed, bool strict,
            double budget_mib) {
  const displab::ExperimentInfo* info = nullptr;
  nlohmann::json cfg;
  try {
    info = &displab::find_experiment(name);
    nlohmann::json user = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot open config file: " << config_path << "\n";
        return 2;
      }
      in >> user;
    }
    cfg = displab::merge_config(info->defaults, user);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config is not valid JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (out_dir.empty()) {
    const char* root = std::getenv("DISPLAB_OUT");
    out_dir =
        (std::filesystem::path(root ? root : "displab-out") / name).string();
  }

  displab::ExperimentContext ctx;
  ctx.out = out_dir;
  ctx.seed = seed;
  ctx.budget_mib = budget_mib;
  ctx.strict = strict;

  displab::ExperimentResult res;
  try {
    res = info->run(cfg, ctx);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  for (const displab::CheckResult& c : res.checks)
    std::printf("%s %s: %s\n", c.pass ? "[ ok ]" : "[FAIL]", c.name.c_str(),
                c.detail.c_str());
  if (res.guard_tripped) {
    std::printf("[guard] %s\n", res.guard_reason.c_str());
    std::printf("wrote %s (partial)\n", out_dir.c_str());
    return 3;
  }
  std::printf("wrote %s\n", out_dir.c_str());
  return strict && !res.all_pass() ? 3 : 0;
}

int cmd_report(const std::string& dir) {
  try {
    displab::render_report(dir, std::cout);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral instability laboratory"};
  app.require_subcommand(1);

  std::string name, config_path, out_dir, report_dir;
  std::uint64_t seed = 0;
  bool strict = false;
  double budget_mib = 2048.0;

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  run->add_option("name", name, "experiment name (see `list`)")->required();
  run->add_option("--config", config_path,
                  "JSON file overriding the experiment defaults");
  run->add_option("--out", out_dir,
                  "output directory (default $DISPLAB_OUT or ./displab-out, "
                  "plus the experiment name)");
  run->add_option("--seed", seed, "seed for all randomized inputs");
  run->add_flag("--strict", strict, "exit nonzero when any check fails");
  run->add_option("--budget-mib", budget_mib,
                  "memory budget; grids beyond it are skipped");

  CLI::App* list = app.add_subcommand("list", "list available experiments");
  CLI::App* report =
      app.add_subcommand("report", "re-render plots and summarize a run");
  report->add_option("dir", report_dir, "run directory")->required();

  CLI11_PARSE(app, argc, argv);
  if (app.got_subcommand(list)) return cmd_list();
  if (app.got_subcommand(report)) return cmd_report(report_dir);
  return cmd_run(name, config_path, out_dir, seed, strict, budget_mib);
}
