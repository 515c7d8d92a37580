#include "cutoffwave/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutoffwave/errors.hpp"
#include "doctest.h"

using namespace cutoffwave;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kTriangularConfig = R"({
  "phi_cut": 1.0,
  "packet": {"kind": "triangular", "w": 1.0},
  "times": [-0.8333333333333333, -0.25, 0.25, 1.3333333333333333],
  "tolerances": {"event": 1e-12, "root": 1e-12}
})";

}  // namespace

TEST_CASE("triangular packet defaults to three quarters of the cutoff") {
  const ScenarioConfig cfg = parse_config(kTriangularConfig);
  CHECK(cfg.packet.evaluate(0.0) == doctest::Approx(0.75));
  CHECK(cfg.packet.min_x() == doctest::Approx(-1.0));
  CHECK(cfg.times.size() == 4);
  const Scenario s = to_scenario(cfg);
  CHECK(sup_distance(s.movers.minus, cfg.packet.reflected()) == 0.0);
}

TEST_CASE("times range form expands inclusively") {
  const ScenarioConfig cfg = parse_config(R"({
    "phi_cut": 1.0,
    "packet": {"kind": "triangular", "w": 1.0},
    "times": {"from": 0.0, "to": 1.0, "count": 5}
  })");
  REQUIRE(cfg.times.size() == 5);
  CHECK(cfg.times.front() == 0.0);
  CHECK(cfg.times.back() == 1.0);
  CHECK(cfg.times[2] == doctest::Approx(0.5));
}

TEST_CASE("knots packet round-trips through the predict output") {
  const ScenarioConfig cfg = parse_config(R"({
    "phi_cut": 1.0,
    "packet": {"kind": "knots",
               "knots": [[-1.0, 0.0, 0.0], [-0.5, 0.6, 0.6],
                          [0.5, 0.6, 0.6], [1.0, 0.0, 0.0]]},
    "times": [0.0]
  })");
  const auto triples = profile_to_triples(cfg.packet);
  const Profile again = profile_from_triples(triples);
  CHECK(sup_distance(again, cfg.packet) == 0.0);
  CHECK(again.knots().size() == cfg.packet.knots().size());
}

TEST_CASE("schema violations carry the origin and fail loudly") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"packet": {}, "times": [0]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "phi_cut": 1.0,
    "packet": {"kind": "triangular", "w": -1.0},
    "times": [0.0]
  })"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "phi_cut": 1.0,
    "packet": {"kind": "triangular", "w": 1.0},
    "times": [0.0],
    "typo_key": 1
  })"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "phi_cut": 1.0,
    "packet": {"kind": "triangular", "w": 1.0, "amplitude": 2.0},
    "times": [0.0]
  })"),
                  ConfigError);
  try {
    parse_config("{\n  \"phi_cut\": 1.0,\n  oops\n}", "cfg.json");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("cfg.json:3") != std::string::npos);
  }
}

TEST_CASE("writers are deterministic byte for byte") {
  const ScenarioConfig cfg = parse_config(kTriangularConfig);
  const CollisionEngine engine(to_scenario(cfg));
  const fs::path dir = fs::temp_directory_path() / "cutoffwave_test_out";
  fs::create_directories(dir);

  write_snapshots_csv(dir / "a.csv", engine, cfg.times, 64);
  write_snapshots_csv(dir / "b.csv", engine, cfg.times, 64);
  const std::string a = read_file(dir / "a.csv");
  CHECK(a == read_file(dir / "b.csv"));
  CHECK(a.substr(0, 8) == "t,x,phi\n");
  CHECK(a.find("\r") == std::string::npos);

  write_events_json(dir / "events.json", engine);
  const std::string events = read_file(dir / "events.json");
  CHECK(events.find("t_star") != std::string::npos);
  CHECK(events.find("annihilation") != std::string::npos);

  write_trajectory_csv(dir / "traj.csv", engine.trajectory(cfg.times));
  const std::string traj = read_file(dir / "traj.csv");
  CHECK(traj.find("t,x_s_plus,x_s_minus,phase") == 0);
  CHECK(traj.find("nan") != std::string::npos);  // pre-contact sample

  const auto predicted = predict_final(cfg.packet, cfg.phi_cut);
  write_predict_json(dir / "predict.json", predicted);
  CHECK(read_file(dir / "predict.json").find("final_knots") !=
        std::string::npos);

  fs::remove_all(dir);
}

TEST_CASE("events.json reports a null contact when nothing happens") {
  const ScenarioConfig cfg = parse_config(R"({
    "phi_cut": 1.0,
    "packet": {"kind": "triangular", "w": 1.0, "amplitude": 0.45},
    "times": [0.0]
  })");
  const CollisionEngine engine(to_scenario(cfg));
  const fs::path dir = fs::temp_directory_path() / "cutoffwave_test_out2";
  fs::create_directories(dir);
  write_events_json(dir / "events.json", engine);
  const std::string events = read_file(dir / "events.json");
  CHECK(events.find("\"contact\": null") != std::string::npos);
  fs::remove_all(dir);
}
