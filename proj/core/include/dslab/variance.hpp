#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dslab/factor_sieve.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"

namespace dslab {

/// Largest Q accepted by the O(Q^2) pair sweeps.
inline constexpr uint32_t kPairSweepBudget = 3000;

struct VarianceReport {
  uint32_t Q = 0;
  unsigned k = 1;
  Rat psi_mass;     // sum of lambda_k(A_q^k)
  Rat overlap_sum;  // sum over ordered pairs (q, r) of lambda_k(A_q^k n A_r^k)
  Rat variance;     // overlap_sum - psi_mass^2, exactly the integral of (S_k - mean)^2
  Rat excess;       // variance - psi_mass
};

/// Exact variance via the O(Q^2) pair sweep. Pairs with dilation D < 1/2
/// contribute exactly zero and are skipped. Rejects Q beyond the budget.
VarianceReport exact_variance(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                              unsigned k, unsigned threads = 1,
                              uint32_t budget = kPairSweepBudget);

/// One sweep, reported at each checkpoint Q' (ascending, all <= Q).
std::vector<VarianceReport> exact_variance_ladder(uint32_t Q, const PsiTable& psi,
                                                  const FactorSieve& sieve, unsigned k,
                                                  std::span<const uint32_t> checkpoints,
                                                  unsigned threads = 1,
                                                  uint32_t budget = kPairSweepBudget);

}  // namespace dslab
