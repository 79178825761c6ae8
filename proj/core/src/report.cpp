#include "dslab/report.hpp"

#include <json.hpp>

namespace dslab {

using nlohmann::json;

std::string make_envelope_line(const ExperimentConfig& c) {
  json cfg;
  cfg["Q"] = c.Q;
  cfg["k"] = c.k;
  cfg["epsilon"] = rat_str(c.epsilon);
  cfg["psi"] = c.psi_spec_string();
  cfg["psi_file"] = c.psi_file;
  cfg["seed"] = c.seed;
  cfg["samples"] = c.samples;
  cfg["threads"] = c.threads;
  cfg["out"] = c.out_path;
  cfg["pair_sweep_budget"] = c.pair_sweep_budget;
  if (c.command == Command::Bounds && c.bounds_kind) {
    json b;
    b["kind"] = bounds_kind_name(*c.bounds_kind);
    b["y"] = rat_str(c.bounds.y);
    b["t"] = rat_str(c.bounds.t);
    b["s"] = rat_str(c.bounds.s);
    b["C"] = rat_str(c.bounds.C);
    b["kappa"] = rat_str(c.bounds.kappa);
    b["K"] = rat_str(c.bounds.K);
    b["variant"] = c.bounds.variant == OverlapVariant::PV ? "PV" : "KMY";
    cfg["bounds"] = b;
  }
  json env;
  env["record"] = "envelope";
  env["schema_version"] = kSchemaVersion;
  env["command"] = command_name(c.command);
  env["config"] = cfg;
  return env.dump() + "\n";
}

std::string make_timing_line(double wall_seconds) {
  json t;
  t["record"] = "timing";
  t["wall_s"] = wall_seconds;
  return t.dump() + "\n";
}

ExperimentConfig config_from_envelope_line(const std::string& line) {
  json env = json::parse(line);
  if (env.at("record") != "envelope") throw std::invalid_argument("not an envelope record");
  if (env.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version");
  ExperimentConfig c;
  c.command = parse_command_name(env.at("command").get<std::string>());
  const json& cfg = env.at("config");
  c.Q = cfg.at("Q").get<uint32_t>();
  c.k = cfg.at("k").get<unsigned>();
  c.epsilon = parse_rat(cfg.at("epsilon").get<std::string>());
  std::string psi = cfg.at("psi").get<std::string>();
  size_t colon = psi.find(':');
  if (colon == std::string::npos) {
    c.psi_preset = parse_psi_preset(psi);
  } else {
    c.psi_preset = parse_psi_preset(psi.substr(0, colon));
    c.psi_param = parse_rat(psi.substr(colon + 1));
  }
  c.psi_file = cfg.at("psi_file").get<std::string>();
  c.seed = cfg.at("seed").get<uint64_t>();
  c.samples = cfg.at("samples").get<uint64_t>();
  c.threads = cfg.at("threads").get<unsigned>();
  c.out_path = cfg.at("out").get<std::string>();
  c.pair_sweep_budget = cfg.at("pair_sweep_budget").get<uint32_t>();
  if (cfg.contains("bounds")) {
    const json& b = cfg.at("bounds");
    c.bounds_kind = parse_bounds_kind_name(b.at("kind").get<std::string>());
    c.bounds.y = parse_rat(b.at("y").get<std::string>());
    c.bounds.t = parse_rat(b.at("t").get<std::string>());
    c.bounds.s = parse_rat(b.at("s").get<std::string>());
    c.bounds.C = parse_rat(b.at("C").get<std::string>());
    c.bounds.kappa = parse_rat(b.at("kappa").get<std::string>());
    c.bounds.K = parse_rat(b.at("K").get<std::string>());
    c.bounds.variant =
        b.at("variant").get<std::string>() == "KMY" ? OverlapVariant::KMY : OverlapVariant::PV;
  }
  return c;
}

}  // namespace dslab
