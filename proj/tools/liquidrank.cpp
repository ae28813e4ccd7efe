// liquidrank: run one market scenario, sweep a parameter grid, or render a
// stored sweep.
//
//   liquidrank simulate --config demo --seed 1 --out runs/d1
//   liquidrank sweep --preset medium --grid fig1 --seeds 1..10 --out runs/fig1
//   liquidrank report --out runs/fig1
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "liquidrank/liquidrank.hpp"

namespace fs = std::filesystem;
using namespace liquidrank;

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kDemoConfig = R"(# Semi-healthy market, consumers consult explicit weighted ratings.
n_agents = 100
days = 30
good_value_ratio = 20
usage_mode = explicit-weighted
seed = 1
)";

/// A file path, or the name of a built-in scenario.
ScenarioConfig load_config(const std::string& name) {
  if (name.empty()) return {};
  if (fs::exists(name)) return read_scenario(name);
  if (name == "demo") return parse_scenario(kDemoConfig);
  throw UsageError("no config file or built-in scenario named '" + name + "'");
}

ScalePreset preset_or_throw(const std::string& name) {
  auto p = scale_preset_from_string(name);
  if (!p) throw UsageError("unknown preset '" + name + "' (expected small, medium or large)");
  return *p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted liquid rank reputation engine and marketplace simulator"};
  app.require_subcommand(1);

  struct {
    std::string config, preset, out;
    std::optional<std::uint64_t> seed;
  } sim;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario and write a run bundle");
  simulate->add_option("--config", sim.config, "Scenario file, or built-in name (demo)");
  simulate->add_option("--seed", sim.seed, "Override the scenario seed");
  simulate->add_option("--preset", sim.preset, "Scale preset: small, medium or large");
  simulate->add_option("--out", sim.out, "Bundle directory")->required();

  struct {
    std::string grid, preset = "medium", seeds = "1..10", config, out;
  } sw;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid over several seeds");
  sweep->add_option("--grid", sw.grid, "Grid: fig1 or fig2")->required();
  sweep->add_option("--preset", sw.preset, "Scale preset: small, medium or large")->capture_default_str();
  sweep->add_option("--seeds", sw.seeds, "Seeds: 1..10, 1,2,3 or 7")->capture_default_str();
  sweep->add_option("--config", sw.config, "Base scenario for settings the grid does not vary");
  sweep->add_option("--out", sw.out, "Directory for summary.csv");

  std::string report_dir, report_path;
  auto* report = app.add_subcommand("report", "Render a stored sweep as a table");
  report->add_option("--out", report_dir, "Sweep directory holding summary.csv");
  report->add_option("path", report_path, "summary.csv or its directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*simulate) {
      ScenarioConfig config = load_config(sim.config);
      if (!sim.preset.empty()) apply_preset(config, preset_or_throw(sim.preset));
      if (sim.seed) config.seed = *sim.seed;
      const ScenarioResult result = run_scenario(config);
      write_bundle({config, result.log, result.states, result.report}, sim.out);
      std::cout << format_report(result.report);
    } else if (*sweep) {
      std::vector<std::uint64_t> seeds;
      try {
        seeds = parse_seed_list(sw.seeds);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      SweepSpec spec;
      try {
        spec = make_sweep(sw.grid, preset_or_throw(sw.preset), seeds, load_config(sw.config));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cerr << "grid " << spec.grid << ": " << spec.rows.size() << " rows x " << kVariants.size()
                << " variants x " << spec.seeds.size() << " seeds = " << spec.run_count() << " runs\n";
      const SweepResult result = run_sweep(spec);
      if (!sw.out.empty()) {
        fs::create_directories(sw.out);
        write_file(fs::path(sw.out) / "summary.csv", format_summary(result));
      }
      std::cout << render_table(result);
    } else if (*report) {
      fs::path path = !report_path.empty() ? fs::path(report_path) : fs::path(report_dir);
      if (path.empty()) throw UsageError("report needs --out <sweep dir> or a summary path");
      if (fs::is_directory(path)) path /= "summary.csv";
      std::cout << render_table(parse_file(path, parse_summary));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
