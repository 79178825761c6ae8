#include "dslab/pair_stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dslab {

PairArithProfile pair_profile(uint32_t q, uint32_t r, const FactorSieve& sieve) {
  if (q == 0 || r == 0) throw std::invalid_argument("pair_profile: arguments must be >= 1");
  if (q > sieve.limit() || r > sieve.limit())
    throw std::invalid_argument("pair_profile: argument exceeds sieve limit");
  PairArithProfile p;
  p.q = q;
  p.r = r;
  p.g = std::gcd(q, r);
  p.l = static_cast<uint64_t>(q) / p.g * r;
  uint32_t qc = q / p.g, rc = r / p.g;  // coprime cofactors
  p.core = static_cast<uint64_t>(qc) * rc;
  std::vector<uint32_t> pq = sieve.distinct_primes(qc);
  std::vector<uint32_t> pr = sieve.distinct_primes(rc);
  p.core_primes.reserve(pq.size() + pr.size());
  std::merge(pq.begin(), pq.end(), pr.begin(), pr.end(), std::back_inserter(p.core_primes));
  return p;
}

namespace {
// p <= t for exact rational t: p * den(t) <= num(t).
bool prime_le(uint32_t p, const Rat& t) {
  Int lhs(p);
  lhs *= t.get_den();
  return lhs <= t.get_num();
}
}  // namespace

unsigned omega_t(const PairArithProfile& prof, const Rat& t) {
  unsigned n = 0;
  for (uint32_t p : prof.core_primes) {
    if (!prime_le(p, t)) break;  // primes ascend
    ++n;
  }
  return n;
}

Rat L_t(const PairArithProfile& prof, const Rat& t) {
  Rat sum(0);
  for (auto it = prof.core_primes.rbegin(); it != prof.core_primes.rend(); ++it) {
    if (prime_le(*it, t)) break;
    sum += frac(1, *it);
  }
  return sum;
}

Rat D_of(const PairArithProfile& prof, const WeightTable& psi, const WeightTable& theta) {
  Rat a = Rat(static_cast<unsigned long>(prof.r)) * psi.value(prof.q);
  Rat b = Rat(static_cast<unsigned long>(prof.q)) * theta.value(prof.r);
  Rat m = std::max(a, b);
  return m / static_cast<unsigned long>(prof.g);
}

Rat D_of(const PairArithProfile& prof, const PsiTable& psi) {
  return D_of(prof, psi.weights(), psi.weights());
}

}  // namespace dslab
