#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dslab/factor_sieve.hpp"
#include "dslab/hiprec.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"
#include "dslab/weight_funcs.hpp"

namespace dslab {

/// Finitely supported weight pair (psi, theta) with multiplicative weights
/// (f, g); carries the mu measures mu^f_psi(v) = f(v) psi(v) / v.
struct BilinearWeights {
  WeightTable psi;
  WeightTable theta;
  WeightFunctionSpec f;
  WeightFunctionSpec g;
};

enum class Side { V, W };

enum class PairClassKind { EtK, FtK };

/// Pairs (v, w) of the support product with D_{psi,theta}(v, w) <= 1 and
/// L_t >= K (EtK) or omega_t >= K (FtK).
struct PairClassSet {
  PairClassKind kind = PairClassKind::EtK;
  Rat t;
  Rat K;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
};

Rat mu_point(const BilinearWeights& w, Side side, uint32_t v, const FactorSieve& sieve);
Rat mu_sum(const BilinearWeights& w, Side side, const FactorSieve& sieve);

PairClassSet build_class_set(const BilinearWeights& w, const Rat& t, const Rat& K,
                             PairClassKind kind, const FactorSieve& sieve);

Rat mu_pair_sum(const BilinearWeights& w, const PairClassSet& pairs, const FactorSieve& sieve);

/// One verified inequality: exact left-hand side, the computable main
/// right-hand factor, and their ratio. Nonconstructive front constants are
/// reported symbolically in the metadata, never folded into rhs_main.
struct BoundReport {
  std::string name;
  Rat lhs;
  DirectedReal rhs_main;
  DirectedReal ratio;  // lhs / rhs_main; [0,0] when lhs = 0
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> metadata;
  uint64_t borderline_count = 0;
};

/// mu-mass of E^{t,K} against (mu_V mu_W e^{-Kt})^(1/2+eps), eps in (0, 2/5].
BoundReport check_lemma31(const BilinearWeights& w, const Rat& t, const Rat& K,
                          const Rat& epsilon, const FactorSieve& sieve);

/// mu-mass of F^{t,K} against (mu_V mu_W e^{-CK})^(1/2+eps); the (Log t)
/// power is reported under both readings in the metadata.
BoundReport check_lemma32(const BilinearWeights& w, const Rat& t, const Rat& K,
                          const Rat& epsilon, const Rat& C, const FactorSieve& sieve);

}  // namespace dslab
