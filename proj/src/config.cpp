#include "cutoffwave/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cutoffwave/errors.hpp"
#include "json.hpp"

namespace cutoffwave {

using nlohmann::json;

namespace {

std::string line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& origin, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key))
      fail(origin, "unknown key \"" + key + "\" in " + where);
  }
}

double require_number(const json& obj, const std::string& key,
                      const std::string& origin) {
  if (!obj.contains(key) || !obj[key].is_number())
    fail(origin, "missing or non-numeric \"" + key + "\"");
  return obj[key].get<double>();
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw ConfigError("failed writing " + path.string());
}

json event_or_null(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::vector<std::array<double, 3>> profile_to_triples(const Profile& p) {
  std::vector<std::array<double, 3>> out;
  out.reserve(p.knots().size());
  for (const Knot& k : p.knots()) out.push_back({k.x, k.left, k.right});
  return out;
}

Profile profile_from_triples(const std::vector<std::array<double, 3>>& triples,
                             double merge_epsilon) {
  std::vector<Knot> ks;
  ks.reserve(triples.size());
  for (const auto& t : triples) ks.push_back({t[0], t[1], t[2]});
  if (merge_epsilon > 0.0) {
    // Ingestion-time cleanup only; the engine itself merges exactly.
    for (Knot& k : ks)
      if (k.left != k.right && std::abs(k.left - k.right) <= merge_epsilon)
        k.left = k.right = 0.5 * (k.left + k.right);
    std::vector<Knot> kept;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (i > 0 && i + 1 < ks.size() && ks[i].left == ks[i].right) {
        const Knot& a = kept.back();
        const Knot& b = ks[i + 1];
        const double t = (ks[i].x - a.x) / (b.x - a.x);
        const double on_line = a.right + (b.left - a.right) * t;
        if (std::abs(ks[i].left - on_line) <= merge_epsilon) continue;
      }
      kept.push_back(ks[i]);
    }
    ks = std::move(kept);
  }
  return Profile::from_knots(std::move(ks));
}

ScenarioConfig parse_config(const std::string& text,
                            const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ":" + line_of(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) fail(origin, "top level must be an object");
  reject_unknown_keys(root,
                      {"phi_cut", "packet", "times", "tolerances", "grid",
                       "validation"},
                      origin, "top level");

  ScenarioConfig cfg;
  cfg.phi_cut = require_number(root, "phi_cut", origin);
  if (!(cfg.phi_cut > 0.0)) fail(origin, "\"phi_cut\" must be positive");

  if (!root.contains("packet") || !root["packet"].is_object())
    fail(origin, "missing \"packet\" object");
  const json& packet = root["packet"];
  const std::string kind = packet.value("kind", "");
  if (kind == "triangular") {
    reject_unknown_keys(packet, {"kind", "w", "amplitude"}, origin, "packet");
    const double w = require_number(packet, "w", origin);
    if (!(w > 0.0)) fail(origin, "packet \"w\" must be positive");
    const double amplitude = packet.contains("amplitude")
                                 ? require_number(packet, "amplitude", origin)
                                 : 0.75 * cfg.phi_cut;
    if (!(amplitude > 0.0) || !(amplitude < cfg.phi_cut))
      fail(origin, "packet amplitude must lie in (0, phi_cut)");
    cfg.packet = Profile::from_knots(
        {{-w, 0.0, 0.0}, {0.0, amplitude, amplitude}, {w, 0.0, 0.0}});
  } else if (kind == "knots") {
    reject_unknown_keys(packet, {"kind", "knots", "merge_epsilon"}, origin,
                        "packet");
    if (!packet.contains("knots") || !packet["knots"].is_array())
      fail(origin, "knots packet requires a \"knots\" array");
    std::vector<std::array<double, 3>> triples;
    for (const json& row : packet["knots"]) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
          !row[1].is_number() || !row[2].is_number())
        fail(origin, "each knot must be [x, v_left, v_right]");
      triples.push_back({row[0].get<double>(), row[1].get<double>(),
                         row[2].get<double>()});
    }
    const double eps = packet.value("merge_epsilon", 0.0);
    if (eps < 0.0) fail(origin, "\"merge_epsilon\" must be nonnegative");
    try {
      cfg.packet = profile_from_triples(triples, eps);
    } catch (const std::invalid_argument& e) {
      fail(origin, std::string("bad packet knots: ") + e.what());
    }
  } else {
    fail(origin, "packet \"kind\" must be \"triangular\" or \"knots\"");
  }

  if (!root.contains("times")) fail(origin, "missing \"times\"");
  const json& times = root["times"];
  if (times.is_array()) {
    for (const json& v : times) {
      if (!v.is_number()) fail(origin, "\"times\" entries must be numbers");
      cfg.times.push_back(v.get<double>());
    }
  } else if (times.is_object()) {
    reject_unknown_keys(times, {"from", "to", "count"}, origin, "times");
    const double from = require_number(times, "from", origin);
    const double to = require_number(times, "to", origin);
    if (!times.contains("count") || !times["count"].is_number_integer())
      fail(origin, "times range requires integer \"count\"");
    const auto count = times["count"].get<long long>();
    if (count < 1 || count > 10'000'000)
      fail(origin, "times \"count\" out of range");
    for (long long i = 0; i < count; ++i) {
      const double s = count == 1 ? 0.0
                                  : static_cast<double>(i) /
                                        static_cast<double>(count - 1);
      cfg.times.push_back(from + (to - from) * s);
    }
  } else {
    fail(origin, "\"times\" must be an array or a {from, to, count} object");
  }
  if (cfg.times.empty()) fail(origin, "\"times\" must not be empty");

  if (root.contains("tolerances")) {
    const json& tol = root["tolerances"];
    if (!tol.is_object()) fail(origin, "\"tolerances\" must be an object");
    reject_unknown_keys(tol, {"event", "root"}, origin, "tolerances");
    if (tol.contains("event")) cfg.tol_event = require_number(tol, "event", origin);
    if (tol.contains("root")) cfg.tol_root = require_number(tol, "root", origin);
    if (!(cfg.tol_event > 0.0) || cfg.tol_event > 1e-3 ||
        !(cfg.tol_root > 0.0) || cfg.tol_root > 1e-3)
      fail(origin, "tolerances must lie in (0, 1e-3]");
  }

  if (root.contains("grid")) {
    const json& grid = root["grid"];
    if (!grid.is_object()) fail(origin, "\"grid\" must be an object");
    reject_unknown_keys(grid, {"h", "L", "t_end"}, origin, "grid");
    GridParams gp;
    gp.h = require_number(grid, "h", origin);
    gp.half_width = require_number(grid, "L", origin);
    gp.t_end = require_number(grid, "t_end", origin);
    if (!(gp.h > 0.0) || !(gp.half_width > 0.0))
      fail(origin, "grid \"h\" and \"L\" must be positive");
    cfg.grid = gp;
  }

  if (root.contains("validation")) {
    const json& val = root["validation"];
    if (!val.is_object()) fail(origin, "\"validation\" must be an object");
    reject_unknown_keys(
        val, {"conservation", "bound", "causality", "merge", "fixed_point"},
        origin, "validation");
    auto get = [&](const char* key, double fallback) {
      return val.contains(key) ? require_number(val, key, origin) : fallback;
    };
    cfg.validation.conservation = get("conservation", cfg.validation.conservation);
    cfg.validation.bound = get("bound", cfg.validation.bound);
    cfg.validation.causality = get("causality", cfg.validation.causality);
    cfg.validation.merge = get("merge", cfg.validation.merge);
    cfg.validation.fixed_point = get("fixed_point", cfg.validation.fixed_point);
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

Scenario to_scenario(const ScenarioConfig& cfg) {
  return make_mirror_scenario(cfg.packet, cfg.phi_cut, cfg.tol_event,
                              cfg.tol_root);
}

void write_snapshots_csv(const std::filesystem::path& path,
                         const CollisionEngine& engine,
                         std::span<const double> times, int fill_samples) {
  std::string out = "t,x,phi\n";
  for (double t : times) {
    const FieldState st = engine.state(t);
    const Profile snap = st.profile();
    std::vector<double> xs;
    for (const Knot& k : snap.knots()) xs.push_back(k.x);
    double lo = -1.0, hi = 1.0;
    if (!snap.empty()) {
      lo = snap.min_x();
      hi = snap.max_x();
      const double margin = 0.05 * (hi - lo);
      lo -= margin;
      hi += margin;
    }
    const int n = std::max(2, fill_samples);
    for (int i = 0; i < n; ++i)
      xs.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(n - 1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs)
      out += fmt17(t) + "," + fmt17(x) + "," + fmt17(snap.evaluate(x)) + "\n";
  }
  write_text(path, out);
}

void write_events_json(const std::filesystem::path& path,
                       const CollisionEngine& engine) {
  json doc;
  if (engine.contact()) {
    doc["contact"] = {{"t_star", engine.contact()->t},
                      {"x_left", engine.contact()->x_left},
                      {"x_right", engine.contact()->x_right}};
  } else {
    doc["contact"] = nullptr;
  }
  doc["t_d"] = event_or_null(engine.decay_time());
  doc["X"] = event_or_null(engine.plateau_half_width());
  doc["annihilation"] = event_or_null(engine.annihilation_time());
  doc["degenerate"] = engine.contact() ? json(engine.degenerate()) : json(nullptr);
  write_text(path, doc.dump(2) + "\n");
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const ShockTrajectory& trajectory) {
  auto phase_name = [](Phase p) {
    switch (p) {
      case Phase::Free: return "free";
      case Phase::Growth: return "growth";
      default: return "decayed";
    }
  };
  std::string out = "t,x_s_plus,x_s_minus,phase\n";
  for (const TrajectorySample& s : trajectory.samples) {
    const std::string xs = s.shock_right ? fmt17(*s.shock_right) : "nan";
    const std::string xm = s.shock_right ? fmt17(-*s.shock_right) : "nan";
    out += fmt17(s.t) + "," + xs + "," + xm + "," + phase_name(s.phase) + "\n";
  }
  write_text(path, out);
}

void write_predict_json(const std::filesystem::path& path,
                        const PredictorResult& result) {
  json doc;
  doc["x1"] = event_or_null(result.flat_begin);
  doc["x2"] = event_or_null(result.flat_end);
  json knots = json::array();
  for (const auto& t : profile_to_triples(result.final))
    knots.push_back({t[0], t[1], t[2]});
  doc["final_knots"] = knots;
  write_text(path, doc.dump(2) + "\n");
}

void write_grid_csv(const std::filesystem::path& path, const GridResult& grid) {
  std::string out = "t,x,phi\n";
  for (const GridSnapshot& snap : grid.snapshots) {
    for (std::size_t i = 0; i < snap.field.size(); ++i) {
      const double x = snap.x0 + static_cast<double>(i) * snap.h;
      out += fmt17(snap.t) + "," + fmt17(x) + "," + fmt17(snap.field[i]) + "\n";
    }
  }
  write_text(path, out);
}

void write_validation_json(const std::filesystem::path& path,
                           const ValidationReport& report,
                           const ValidationTolerances& tol) {
  json doc;
  auto entry = [](double value, double tolerance) {
    return json{{"value", value},
                {"tolerance", tolerance},
                {"pass", value <= tolerance}};
  };
  doc["conservation"] = entry(report.conservation_residual, tol.conservation);
  doc["cutoff_bound"] = entry(report.bound_violation, tol.bound);
  doc["causality"] = entry(report.causality_residual, tol.causality);
  doc["merge"] = entry(report.merge_distance, tol.merge);
  doc["fixed_point"] = entry(report.fixed_point_distance, tol.fixed_point);
  doc["pass"] = report.passes(tol);
  write_text(path, doc.dump(2) + "\n");
}

}  // namespace cutoffwave
