#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cutoffwave/grid_oracle.hpp"
#include "cutoffwave/predictor.hpp"
#include "cutoffwave/shock.hpp"
#include "cutoffwave/validators.hpp"

namespace cutoffwave {

// Scenario file contents (JSON). See README for the schema.
struct ScenarioConfig {
  double phi_cut = 1.0;
  Profile packet;  // right mover; the left mover is its mirror image
  std::vector<double> times;
  double tol_event = 1e-12;
  double tol_root = 1e-12;
  std::optional<GridParams> grid;
  ValidationTolerances validation;
};

// Throws ConfigError with a line-anchored message on parse or schema
// violations.
ScenarioConfig load_config(const std::filesystem::path& path);
ScenarioConfig parse_config(const std::string& text,
                            const std::string& origin = "<config>");

Scenario to_scenario(const ScenarioConfig& cfg);

// Output writers. All floats are written with 17 significant digits and LF
// line endings so identical inputs produce identical bytes.
void write_snapshots_csv(const std::filesystem::path& path,
                         const CollisionEngine& engine,
                         std::span<const double> times, int fill_samples);
void write_events_json(const std::filesystem::path& path,
                       const CollisionEngine& engine);
void write_trajectory_csv(const std::filesystem::path& path,
                          const ShockTrajectory& trajectory);
void write_predict_json(const std::filesystem::path& path,
                        const PredictorResult& result);
void write_grid_csv(const std::filesystem::path& path, const GridResult& grid);
void write_validation_json(const std::filesystem::path& path,
                           const ValidationReport& report,
                           const ValidationTolerances& tol);

// Profile <-> knot-triple array helpers shared by config and predict output.
std::vector<std::array<double, 3>> profile_to_triples(const Profile& p);
Profile profile_from_triples(const std::vector<std::array<double, 3>>& triples,
                             double merge_epsilon = 0.0);

}  // namespace cutoffwave
