#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

/// Linear sieve of smallest prime factors and Euler totients up to a limit.
/// Immutable after construction and safe to share across threads.
class FactorSieve {
 public:
  /// Builds tables for 1..limit in O(limit). Rejects limit = 0.
  explicit FactorSieve(uint32_t limit);

  uint32_t limit() const { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  uint32_t spf(uint32_t n) const;
  /// Euler totient of n, 1 <= n <= limit.
  uint32_t phi(uint32_t n) const;
  /// n >= 2 and spf(n) == n.
  bool is_prime(uint32_t n) const;

  const std::vector<uint32_t>& primes() const { return primes_; }
  /// Number of primes <= x (x may exceed the sieve limit only if x <= limit).
  uint32_t prime_count_upto(uint32_t x) const;

  /// Distinct prime divisors of n in ascending order.
  std::vector<uint32_t> distinct_primes(uint32_t n) const;
  /// All (d, mu(d)) with d a squarefree divisor of n.
  std::vector<std::pair<uint32_t, int>> squarefree_divisors_mu(uint32_t n) const;
  /// All divisors of n in ascending order.
  std::vector<uint32_t> divisors(uint32_t n) const;

 private:
  void check_range(uint32_t n, uint32_t lo) const;

  uint32_t limit_;
  std::vector<uint32_t> spf_;
  std::vector<uint32_t> phi_;
  std::vector<uint32_t> primes_;
};

}  // namespace dslab
