#pragma once

#include <array>
#include <cstdint>

#include "dslab/factor_sieve.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"

namespace dslab {

struct MonteCarloReport {
  uint32_t Q = 0;
  unsigned k = 1;
  uint64_t samples = 0;
  uint64_t seed = 0;
  Rat sample_mean;
  Rat sample_variance;  // unbiased, denominator n - 1
  Rat psi_mass;
  Rat mean_error;  // |sample_mean - psi_mass|
  std::array<Rat, 4> power_sums;  // exact sums of count^1 .. count^4
};

/// Draws n points of [0,1]^k (53-bit dyadic coordinates keyed by
/// (seed, sample, coordinate)), counts solutions at each, and returns exact
/// sample statistics. Identical output for every thread count. Requires n >= 2.
MonteCarloReport monte_carlo(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                             unsigned k, uint64_t n, uint64_t seed, unsigned threads = 1);

/// Central moment of the sampled counts (p = 2 biased variance, p = 4 used by
/// the variance-of-variance bound), exact.
Rat mc_central_moment(const MonteCarloReport& report, unsigned p);

}  // namespace dslab
