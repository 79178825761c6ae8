#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dslab/approx_sets.hpp"
#include "dslab/factor_sieve.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"

namespace dslab {

struct SolutionWitness {
  std::vector<uint32_t> a;  // one numerator per coordinate
  uint32_t q = 0;
};

struct SolutionCount {
  uint64_t count = 0;
  std::optional<std::vector<SolutionWitness>> witnesses;
};

/// Number of pairs (a, q) with q <= Q, every a_i coprime to q and
/// |q*alpha_i - a_i| < psi(q). Witness recording is off by default to keep
/// the sampling loop allocation-free.
SolutionCount count_solutions(std::span<const Rat> alpha, uint32_t Q, const PsiTable& psi,
                              const FactorSieve& sieve, bool record_witnesses = false);

/// Cumulative mass: sum over q <= Q of (2 psi(q) phi(q) / q)^k, exact.
Rat psi_mass(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k);

}  // namespace dslab
