#pragma once

#include <cstdint>
#include <vector>

#include "dslab/factor_sieve.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"

namespace dslab {

/// Arithmetic statistics of an integer pair: gcd, lcm, the core qr/(q,r)^2
/// and its distinct primes. L_t and omega_t read off the core primes.
struct PairArithProfile {
  uint32_t q = 0;
  uint32_t r = 0;
  uint32_t g = 1;       // gcd(q, r)
  uint64_t l = 0;       // lcm(q, r)
  uint64_t core = 1;    // (q/g) * (r/g); 1 exactly when q == r
  std::vector<uint32_t> core_primes;  // ascending, duplicate-free
};

/// Requires q, r in [1, sieve.limit()].
PairArithProfile pair_profile(uint32_t q, uint32_t r, const FactorSieve& sieve);

/// Number of core primes p <= t.
unsigned omega_t(const PairArithProfile& prof, const Rat& t);

/// Sum of 1/p over core primes p > t, exact.
Rat L_t(const PairArithProfile& prof, const Rat& t);

/// max(r*psi(q), q*theta(r)) / gcd(q, r), exact. With theta = psi this is the
/// pair dilation D(q, r); pairs with D < 1/2 have disjoint approximation sets.
Rat D_of(const PairArithProfile& prof, const WeightTable& psi, const WeightTable& theta);
Rat D_of(const PairArithProfile& prof, const PsiTable& psi);

}  // namespace dslab
