#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dslab/factor_sieve.hpp"
#include "dslab/prop_checks.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"
#include "dslab/variance.hpp"

namespace dslab {

enum class Command { Measure, Variance, MonteCarlo, Bounds };
enum class BoundsKind { Prop1, Prop2, Prop3, Lemma31, Lemma32, OverlapSweep };
enum class PsiPreset { Const, Power, PrimesOnly, Cluster, File };

struct BoundsParams {
  Rat y{1};
  Rat t{1};
  Rat s{1};
  Rat C{1};
  Rat kappa = frac(1, 20);
  Rat K{0};
  OverlapVariant variant = OverlapVariant::PV;
};

struct ExperimentConfig {
  Command command = Command::Measure;
  std::optional<BoundsKind> bounds_kind;
  uint32_t Q = 100;
  unsigned k = 1;
  Rat epsilon = frac(3, 10);
  PsiPreset psi_preset = PsiPreset::Const;
  Rat psi_param = frac(1, 2);
  std::string psi_file;
  uint64_t seed = 42;
  uint64_t samples = 100000;
  unsigned threads = 0;  // 0 = auto
  std::string out_path;
  BoundsParams bounds;
  uint32_t pair_sweep_budget = kPairSweepBudget;

  /// Human-readable problems; empty means the config is runnable.
  std::vector<std::string> validate() const;

  /// Builds the psi table this config names. File tables must cover Q.
  PsiTable build_psi(const FactorSieve& sieve) const;

  /// "CONST:1/2", "POWER:2", "FILE" ... as given on the command line.
  std::string psi_spec_string() const;
};

std::string command_name(Command c);
std::string bounds_kind_name(BoundsKind b);
Command parse_command_name(const std::string& s);
BoundsKind parse_bounds_kind_name(const std::string& s);
PsiPreset parse_psi_preset(const std::string& s);
std::string psi_preset_name(PsiPreset p);

}  // namespace dslab
