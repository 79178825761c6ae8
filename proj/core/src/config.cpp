#include "dslab/config.hpp"

#include <stdexcept>

namespace dslab {

std::string command_name(Command c) {
  switch (c) {
    case Command::Measure: return "measure";
    case Command::Variance: return "variance";
    case Command::MonteCarlo: return "montecarlo";
    case Command::Bounds: return "bounds";
  }
  return "?";
}

std::string bounds_kind_name(BoundsKind b) {
  switch (b) {
    case BoundsKind::Prop1: return "prop1";
    case BoundsKind::Prop2: return "prop2";
    case BoundsKind::Prop3: return "prop3";
    case BoundsKind::Lemma31: return "lemma31";
    case BoundsKind::Lemma32: return "lemma32";
    case BoundsKind::OverlapSweep: return "overlap-sweep";
  }
  return "?";
}

Command parse_command_name(const std::string& s) {
  if (s == "measure") return Command::Measure;
  if (s == "variance") return Command::Variance;
  if (s == "montecarlo") return Command::MonteCarlo;
  if (s == "bounds") return Command::Bounds;
  throw std::invalid_argument("unknown command: " + s);
}

BoundsKind parse_bounds_kind_name(const std::string& s) {
  if (s == "prop1") return BoundsKind::Prop1;
  if (s == "prop2") return BoundsKind::Prop2;
  if (s == "prop3") return BoundsKind::Prop3;
  if (s == "lemma31") return BoundsKind::Lemma31;
  if (s == "lemma32") return BoundsKind::Lemma32;
  if (s == "overlap-sweep") return BoundsKind::OverlapSweep;
  throw std::invalid_argument("unknown bounds subcommand: " + s);
}

PsiPreset parse_psi_preset(const std::string& s) {
  if (s == "CONST") return PsiPreset::Const;
  if (s == "POWER") return PsiPreset::Power;
  if (s == "PRIMES_ONLY") return PsiPreset::PrimesOnly;
  if (s == "CLUSTER") return PsiPreset::Cluster;
  if (s == "FILE") return PsiPreset::File;
  throw std::invalid_argument("unknown psi preset: " + s);
}

std::string psi_preset_name(PsiPreset p) {
  switch (p) {
    case PsiPreset::Const: return "CONST";
    case PsiPreset::Power: return "POWER";
    case PsiPreset::PrimesOnly: return "PRIMES_ONLY";
    case PsiPreset::Cluster: return "CLUSTER";
    case PsiPreset::File: return "FILE";
  }
  return "?";
}

std::string ExperimentConfig::psi_spec_string() const {
  if (psi_preset == PsiPreset::File) return "FILE";
  return psi_preset_name(psi_preset) + ":" + rat_str(psi_param);
}

std::vector<std::string> ExperimentConfig::validate() const {
  std::vector<std::string> errs;
  if (Q == 0) errs.push_back("--Q must be >= 1");
  if (k == 0) errs.push_back("--k must be >= 1");
  switch (psi_preset) {
    case PsiPreset::Const:
    case PsiPreset::PrimesOnly:
    case PsiPreset::Cluster:
      if (psi_param < 0 || psi_param > frac(1, 2))
        errs.push_back("psi preset parameter must lie in [0, 1/2]");
      break;
    case PsiPreset::Power:
      if (psi_param <= 0) errs.push_back("POWER preset exponent must be positive");
      break;
    case PsiPreset::File:
      if (psi_file.empty()) errs.push_back("FILE preset requires --psi-file");
      break;
  }
  if (command == Command::Variance || command == Command::Bounds) {
    if (Q > pair_sweep_budget)
      errs.push_back("--Q exceeds the pair-sweep budget of " +
                     std::to_string(pair_sweep_budget));
  }
  if (command == Command::Variance) {
    if (epsilon <= 0 || epsilon >= 1) errs.push_back("--epsilon must lie in (0, 1)");
  }
  if (command == Command::MonteCarlo) {
    if (samples < 2) errs.push_back("--samples must be >= 2");
  }
  if (command == Command::Bounds) {
    if (!bounds_kind) {
      errs.push_back("bounds requires a subcommand");
    } else {
      switch (*bounds_kind) {
        case BoundsKind::Prop1:
        case BoundsKind::Prop2:
        case BoundsKind::Prop3:
          if (epsilon <= 0 || epsilon >= 1) errs.push_back("--epsilon must lie in (0, 1)");
          if (bounds.y < 1) errs.push_back("--y must be >= 1");
          break;
        case BoundsKind::Lemma31:
        case BoundsKind::Lemma32:
          if (epsilon <= 0 || epsilon > frac(2, 5))
            errs.push_back("--epsilon must lie in (0, 2/5] for the bilinear lemmas");
          if (bounds.y < 1) errs.push_back("--y must be >= 1");
          break;
        case BoundsKind::OverlapSweep:
          break;
      }
      if (*bounds_kind == BoundsKind::Prop2) {
        if (bounds.t < 1 || bounds.s < 1) errs.push_back("--t and --s must be >= 1");
        if (bounds.C < 1) errs.push_back("--C must be >= 1");
      }
      if (*bounds_kind == BoundsKind::Prop3) {
        if (bounds.t < 1) errs.push_back("--t must be >= 1");
        if (bounds.kappa <= 0) errs.push_back("--kappa must be positive");
        if (bounds.C < 1) errs.push_back("--C must be >= 1");
      }
      if (*bounds_kind == BoundsKind::Lemma31 || *bounds_kind == BoundsKind::Lemma32) {
        if (bounds.t < 1) errs.push_back("--t must be >= 1");
      }
      if (*bounds_kind == BoundsKind::Lemma32) {
        if (bounds.C <= 0) errs.push_back("--C must be positive");
      }
    }
  }
  return errs;
}

PsiTable ExperimentConfig::build_psi(const FactorSieve& sieve) const {
  switch (psi_preset) {
    case PsiPreset::Const:
      return PsiTable::constant(Q, psi_param);
    case PsiPreset::Power:
      return PsiTable::power_law(Q, psi_param);
    case PsiPreset::PrimesOnly:
      return PsiTable::primes_only(Q, psi_param, sieve);
    case PsiPreset::Cluster:
      return PsiTable::cluster(Q, psi_param);
    case PsiPreset::File: {
      PsiTable t = PsiTable::load_file(psi_file);
      if (t.Q() < Q)
        throw std::invalid_argument("psi table file covers only q <= " + std::to_string(t.Q()) +
                                    " but --Q is " + std::to_string(Q));
      return t;
    }
  }
  throw std::logic_error("unreachable psi preset");
}

}  // namespace dslab
