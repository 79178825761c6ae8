// Command-line surface for the coprime approximation-set laboratory.
//
//   dslab measure    --Q 500 --psi CONST:1/4
//   dslab variance   --Q 512 --k 2 --epsilon 1/2 --psi POWER:2 --out run.jsonl
//   dslab montecarlo --Q 200 --k 2 --samples 100000 --seed 42
//   dslab bounds prop1 --Q 256 --k 2 --epsilon 3/10 --y 4
//   dslab bounds overlap-sweep --Q 200
//
// Exit codes: 0 success, 1 validation error, 2 invariant violation, 3 I/O.

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <string>

#include "dslab/commands.hpp"

namespace {

dslab::Rat parse_rat_flag(const std::string& text, const std::string& flag) {
  try {
    return dslab::parse_rat(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

struct RawFlags {
  std::string epsilon = "3/10";
  std::string psi = "CONST:1/2";
  std::string psi_file;
  std::string threads = "auto";
  std::string y = "1", t = "1", s = "1", C = "1", kappa = "1/20", K = "0";
  std::string variant = "PV";
};

void add_common_flags(CLI::App* cmd, dslab::ExperimentConfig& config, RawFlags& raw) {
  cmd->add_option("--Q", config.Q, "Support bound / sweep range");
  cmd->add_option("--k", config.k, "Dimension");
  cmd->add_option("--epsilon", raw.epsilon, "Exponent parameter, a rational like 3/10");
  cmd->add_option("--psi", raw.psi,
                  "Psi preset: CONST:c | POWER:k | PRIMES_ONLY:c | CLUSTER:c | FILE");
  cmd->add_option("--psi-file", raw.psi_file, "Psi table path for the FILE preset");
  cmd->add_option("--seed", config.seed, "Sampler seed");
  cmd->add_option("--samples", config.samples, "Monte Carlo sample count");
  cmd->add_option("--threads", raw.threads, "Worker count or 'auto'");
  cmd->add_option("--out", config.out_path, "Write records here (CSV lands at <out>.csv)");
}

void add_bounds_flags(CLI::App* cmd, RawFlags& raw) {
  cmd->add_option("--y", raw.y, "Dilation cutoff y >= 1");
  cmd->add_option("--t", raw.t, "Prime threshold t >= 1");
  cmd->add_option("--s", raw.s, "L-threshold scale s >= 1");
  cmd->add_option("--C", raw.C, "Decay constant C");
  cmd->add_option("--kappa", raw.kappa, "Omega threshold density kappa > 0");
  cmd->add_option("--K", raw.K, "Class-set threshold K");
  cmd->add_option("--variant", raw.variant, "Overlap variant: PV or KMY");
}

void finalize_config(dslab::ExperimentConfig& config, const RawFlags& raw) {
  config.epsilon = parse_rat_flag(raw.epsilon, "--epsilon");
  size_t colon = raw.psi.find(':');
  std::string preset = colon == std::string::npos ? raw.psi : raw.psi.substr(0, colon);
  try {
    config.psi_preset = dslab::parse_psi_preset(preset);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--psi", e.what());
  }
  if (colon != std::string::npos)
    config.psi_param = parse_rat_flag(raw.psi.substr(colon + 1), "--psi");
  config.psi_file = raw.psi_file;
  if (raw.threads == "auto" || raw.threads == "AUTO") {
    config.threads = 0;
  } else {
    try {
      config.threads = static_cast<unsigned>(std::stoul(raw.threads));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--threads", "expected a count or 'auto'");
    }
  }
  config.bounds.y = parse_rat_flag(raw.y, "--y");
  config.bounds.t = parse_rat_flag(raw.t, "--t");
  config.bounds.s = parse_rat_flag(raw.s, "--s");
  config.bounds.C = parse_rat_flag(raw.C, "--C");
  config.bounds.kappa = parse_rat_flag(raw.kappa, "--kappa");
  config.bounds.K = parse_rat_flag(raw.K, "--K");
  if (raw.variant == "PV") {
    config.bounds.variant = dslab::OverlapVariant::PV;
  } else if (raw.variant == "KMY") {
    config.bounds.variant = dslab::OverlapVariant::KMY;
  } else {
    throw CLI::ValidationError("--variant", "expected PV or KMY");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo experiments on coprime approximation set systems"};
  app.require_subcommand(1);

  dslab::ExperimentConfig config;
  RawFlags raw;

  CLI::App* measure = app.add_subcommand("measure", "Interval measure vs the closed form");
  add_common_flags(measure, config, raw);

  CLI::App* variance =
      app.add_subcommand("variance", "Exact variance sweep with pair classification");
  add_common_flags(variance, config, raw);

  CLI::App* montecarlo = app.add_subcommand("montecarlo", "Seeded sampling of solution counts");
  add_common_flags(montecarlo, config, raw);

  CLI::App* bounds = app.add_subcommand("bounds", "Inequality ratio reports");
  bounds->require_subcommand(1);
  const char* kinds[] = {"prop1", "prop2", "prop3", "lemma31", "lemma32", "overlap-sweep"};
  const char* kind_help[] = {
      "Pair sum with D <= y vs y^(1-eps) Psi^(1+eps)",
      "Pair sum with D <= y, L_t >= 1/s vs e^(-Ct/s) y^(1-eps) Psi^(1+eps)",
      "Pair sum with D <= y, omega_t >= kappa log t vs t^(-C) y^(1-eps) Psi^(1+eps)",
      "Bilinear mu-mass of E^{t,K} vs (mu_V mu_W e^(-Kt))^(1/2+eps)",
      "Bilinear mu-mass of F^{t,K} vs (mu_V mu_W e^(-CK))^(1/2+eps)",
      "Exhaustive per-pair overlap ratio sweep",
  };
  for (int i = 0; i < 6; ++i) {
    CLI::App* sub = bounds->add_subcommand(kinds[i], kind_help[i]);
    add_common_flags(sub, config, raw);
    add_bounds_flags(sub, raw);
    sub->parse_complete_callback([&config, i]() {
      config.bounds_kind = dslab::parse_bounds_kind_name(
          std::array<const char*, 6>{"prop1", "prop2", "prop3", "lemma31", "lemma32",
                                     "overlap-sweep"}[i]);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : dslab::kExitValidation;
  }

  if (measure->parsed()) config.command = dslab::Command::Measure;
  if (variance->parsed()) config.command = dslab::Command::Variance;
  if (montecarlo->parsed()) config.command = dslab::Command::MonteCarlo;
  if (bounds->parsed()) config.command = dslab::Command::Bounds;

  try {
    finalize_config(config, raw);
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : dslab::kExitValidation;
  }

  dslab::CommandResult result = dslab::run_command(config);
  return dslab::write_outputs(result, config);
}
