#pragma once

#include <cstdint>

#include "dslab/factor_sieve.hpp"
#include "dslab/rational.hpp"

namespace dslab {

/// The multiplicative weight f(n) = phi(n)^k / n^(k-1). Its divisor sum is
/// dominated by the totient identity: (1*f)(n) <= sum_{d|n} phi(d) = n.
struct WeightFunctionSpec {
  unsigned k_exp = 1;

  Rat value(uint32_t n, const FactorSieve& sieve) const;
};

struct DivisorBoundResult {
  bool holds = false;           // (1*f)(n) <= n for every n <= N
  uint32_t worst_n = 0;         // first argmax of (1*f)(n) / n
  Rat worst_ratio;              // max over n of (1*f)(n) / n
  uint64_t equality_count = 0;  // how many n attain (1*f)(n) = n
};

/// Exact check of the divisor-sum bound for all n <= N.
DivisorBoundResult verify_divisor_bound(const WeightFunctionSpec& f, uint32_t N,
                                        const FactorSieve& sieve);

}  // namespace dslab
