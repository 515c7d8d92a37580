// Command-line front end: scenario ingestion, batch runs, and emission of
// snapshot / trajectory / prediction / validation data files.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cutoffwave/config.hpp"
#include "cutoffwave/errors.hpp"

namespace fs = std::filesystem;
using namespace cutoffwave;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitScenario = 3;
constexpr int kExitValidation = 4;

struct Options {
  std::string config_path;
  std::string out_dir;
  int samples = 512;
};

fs::path prepare_out_dir(const Options& opt) {
  std::string dir = opt.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CUTOFFWAVE_OUT_DIR")) dir = env;
  }
  if (dir.empty()) dir = "out";
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

int run_command(const std::string& name, const Options& opt) {
  const ScenarioConfig cfg = load_config(opt.config_path);
  const fs::path out = prepare_out_dir(opt);

  if (name == "predict") {
    const PredictorResult result = predict_final(cfg.packet, cfg.phi_cut);
    write_predict_json(out / "predict.json", result);
    return 0;
  }
  if (name == "oracle") {
    if (!cfg.grid)
      throw ConfigError(opt.config_path +
                        ": the oracle subcommand requires a \"grid\" section");
    const GridResult grid =
        grid_simulate(to_scenario(cfg), *cfg.grid, cfg.times);
    write_grid_csv(out / "snapshots.csv", grid);
    return 0;
  }

  const CollisionEngine engine(to_scenario(cfg));
  if (name == "run") {
    write_snapshots_csv(out / "snapshots.csv", engine, cfg.times, opt.samples);
    write_events_json(out / "events.json", engine);
    return 0;
  }
  if (name == "trajectory") {
    write_trajectory_csv(out / "trajectory.csv", engine.trajectory(cfg.times));
    return 0;
  }
  if (name == "validate") {
    const ValidationReport report = validate_all(engine.scenario());
    write_validation_json(out / "validation.json", report, cfg.validation);
    if (!report.passes(cfg.validation)) {
      std::cerr << "validation failed; see "
                << (out / "validation.json").string() << "\n";
      return kExitValidation;
    }
    return 0;
  }
  throw std::logic_error("unreachable subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Event-driven simulator for a 1+1D massless scalar field with a hard "
      "field cutoff"};
  app.require_subcommand(1);

  Options opt;
  const char* names[] = {"run", "trajectory", "predict", "oracle", "validate"};
  const char* blurbs[] = {
      "evolve the scenario and write snapshots.csv + events.json",
      "sample the shock trajectory into trajectory.csv",
      "apply the direct final-state map and write predict.json",
      "run the first-order grid simulation into snapshots.csv",
      "run the property checks and write validation.json"};
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], blurbs[i]);
    sub->add_option("--config", opt.config_path, "scenario config (JSON)")
        ->required();
    sub->add_option("--out", opt.out_dir,
                    "output directory (default $CUTOFFWAVE_OUT_DIR or ./out)");
    sub->add_option("--samples", opt.samples,
                    "uniform x samples per snapshot in addition to knots");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return run_command(app.get_subcommands().front()->get_name(), opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ScenarioError& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return kExitScenario;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
