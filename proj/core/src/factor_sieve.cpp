#include "dslab/factor_sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace dslab {

FactorSieve::FactorSieve(uint32_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("FactorSieve: limit must be >= 1");
  spf_.assign(limit + 1, 0);
  phi_.assign(limit + 1, 0);
  phi_[1] = 1;
  for (uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      phi_[i] = i - 1;
      primes_.push_back(i);
    }
    for (uint32_t p : primes_) {
      if (p > spf_[i]) break;
      uint64_t ip = static_cast<uint64_t>(i) * p;
      if (ip > limit) break;
      spf_[ip] = p;
      phi_[ip] = (i % p == 0) ? phi_[i] * p : phi_[i] * (p - 1);
    }
  }
}

void FactorSieve::check_range(uint32_t n, uint32_t lo) const {
  if (n < lo || n > limit_)
    throw std::invalid_argument("FactorSieve: argument " + std::to_string(n) +
                                " outside table range");
}

uint32_t FactorSieve::spf(uint32_t n) const {
  check_range(n, 2);
  return spf_[n];
}

uint32_t FactorSieve::phi(uint32_t n) const {
  check_range(n, 1);
  return phi_[n];
}

bool FactorSieve::is_prime(uint32_t n) const {
  check_range(n, 1);
  return n >= 2 && spf_[n] == n;
}

uint32_t FactorSieve::prime_count_upto(uint32_t x) const {
  check_range(x, 1);
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<uint32_t>(it - primes_.begin());
}

std::vector<uint32_t> FactorSieve::distinct_primes(uint32_t n) const {
  check_range(n, 1);
  std::vector<uint32_t> out;
  while (n > 1) {
    uint32_t p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<uint32_t, int>> FactorSieve::squarefree_divisors_mu(uint32_t n) const {
  std::vector<uint32_t> ps = distinct_primes(n);
  std::vector<std::pair<uint32_t, int>> out;
  out.reserve(size_t{1} << ps.size());
  out.emplace_back(1u, 1);
  for (uint32_t p : ps) {
    size_t m = out.size();
    for (size_t i = 0; i < m; ++i) out.emplace_back(out[i].first * p, -out[i].second);
  }
  return out;
}

std::vector<uint32_t> FactorSieve::divisors(uint32_t n) const {
  check_range(n, 1);
  std::vector<uint32_t> out{1};
  uint32_t m = n;
  while (m > 1) {
    uint32_t p = spf_[m];
    uint32_t e = 0;
    while (m % p == 0) m /= p, ++e;
    size_t base = out.size();
    uint64_t pk = 1;
    for (uint32_t j = 1; j <= e; ++j) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * static_cast<uint32_t>(pk));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dslab
