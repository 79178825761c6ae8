#include "dslab/weight_funcs.hpp"

#include <stdexcept>
#include <vector>

namespace dslab {

Rat WeightFunctionSpec::value(uint32_t n, const FactorSieve& sieve) const {
  if (k_exp == 0) throw std::invalid_argument("WeightFunctionSpec: k must be >= 1");
  Int num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), sieve.phi(n), k_exp);
  mpz_ui_pow_ui(den.get_mpz_t(), n, k_exp - 1);
  return frac(num, den);
}

DivisorBoundResult verify_divisor_bound(const WeightFunctionSpec& f, uint32_t N,
                                        const FactorSieve& sieve) {
  if (N == 0 || N > sieve.limit())
    throw std::invalid_argument("verify_divisor_bound: N outside sieve range");
  std::vector<Rat> fvals(N + 1);
  for (uint32_t d = 1; d <= N; ++d) fvals[d] = f.value(d, sieve);
  std::vector<Rat> acc(N + 1, Rat(0));
  for (uint32_t d = 1; d <= N; ++d) {
    for (uint64_t m = d; m <= N; m += d) acc[m] += fvals[d];
  }
  DivisorBoundResult out;
  out.holds = true;
  out.worst_n = 1;
  out.worst_ratio = acc[1];  // f(1) = 1
  for (uint32_t n = 1; n <= N; ++n) {
    if (acc[n] > n) out.holds = false;
    if (acc[n] == n) ++out.equality_count;
    // acc[n]/n > worst  <=>  acc[n] > worst * n, avoiding a division per n.
    Rat scaled = out.worst_ratio * static_cast<unsigned long>(n);
    if (acc[n] > scaled) {
      out.worst_n = n;
      out.worst_ratio = acc[n] / static_cast<unsigned long>(n);
    }
  }
  return out;
}

}  // namespace dslab
