#include "dslab/monte_carlo.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "dslab/counting.hpp"
#include "dslab/parallel.hpp"
#include "dslab/philox.hpp"

namespace dslab {

namespace {

using u128 = unsigned __int128;

struct PowerSums {
  u128 s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  void add_count(uint64_t c) {
    u128 c2 = (u128)c * c;
    s1 += c;
    s2 += c2;
    s3 += c2 * c;
    s4 += c2 * c2;
  }
  void merge(const PowerSums& o) {
    s1 += o.s1;
    s2 += o.s2;
    s3 += o.s3;
    s4 += o.s4;
  }
};

// psi values as int64 fractions; usable when every numerator and denominator
// fits well inside 64 bits so the membership test stays in int128.
struct FixedPsi {
  bool usable = false;
  std::vector<int64_t> num, den;
};

FixedPsi fixed_psi(uint32_t Q, const PsiTable& psi) {
  FixedPsi f;
  f.num.assign(Q + 1, 0);
  f.den.assign(Q + 1, 1);
  const int64_t bound = int64_t{1} << 62;
  for (uint32_t q = 1; q <= Q; ++q) {
    const Rat& v = psi.value(q);
    if (!v.get_num().fits_slong_p() || !v.get_den().fits_slong_p()) return f;
    int64_t n = v.get_num().get_si();
    int64_t d = v.get_den().get_si();
    if (n >= bound || d >= bound) return f;
    f.num[q] = n;
    f.den[q] = d;
  }
  f.usable = true;
  return f;
}

// Counts q <= Q whose k coordinate tests all pass, entirely in integers.
uint64_t count_fast(const FixedPsi& f, uint32_t Q, unsigned k, const uint64_t* coords) {
  uint64_t cnt = 0;
  for (uint32_t q = 1; q <= Q; ++q) {
    int64_t num = f.num[q];
    if (num == 0) continue;
    int64_t den = f.den[q];
    bool good = true;
    for (unsigned j = 0; j < k; ++j) {
      u128 t = (u128)q * coords[j];            // q * m, alpha = m / 2^53
      uint64_t a = (uint64_t)((t + (uint64_t{1} << 52)) >> 53);
      u128 shifted = (u128)a << 53;
      u128 diff = t >= shifted ? t - shifted : shifted - t;
      // |q*alpha - a| < psi(q)  <=>  diff * den < num * 2^53
      if (!(diff * (u128)den < ((u128)num << 53))) {
        good = false;
        break;
      }
      if (std::gcd(a, (uint64_t)q) != 1) {
        good = false;
        break;
      }
    }
    if (good) ++cnt;
  }
  return cnt;
}

}  // namespace

MonteCarloReport monte_carlo(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                             unsigned k, uint64_t n, uint64_t seed, unsigned threads) {
  if (n < 2) throw std::invalid_argument("monte_carlo: need at least 2 samples");
  if (k == 0) throw std::invalid_argument("monte_carlo: k must be >= 1");
  if (Q == 0 || Q > psi.Q() || Q > sieve.limit())
    throw std::invalid_argument("monte_carlo: Q outside table range");

  FixedPsi fixed = fixed_psi(Q, psi);

  std::vector<PowerSums> partials = run_chunked<PowerSums>(
      0, n, threads, kDefaultChunks, [&](uint64_t, uint64_t b, uint64_t e) {
        PowerSums acc;
        std::vector<uint64_t> coords(k);
        std::vector<Rat> alpha(k);
        for (uint64_t s = b; s < e; ++s) {
          for (unsigned j = 0; j < k; ++j) coords[j] = sample_bits53(seed, s, j);
          uint64_t c;
          if (fixed.usable) {
            c = count_fast(fixed, Q, k, coords.data());
          } else {
            for (unsigned j = 0; j < k; ++j) alpha[j] = dyadic53(coords[j]);
            c = count_solutions(alpha, Q, psi, sieve, false).count;
          }
          acc.add_count(c);
        }
        return acc;
      });

  PowerSums total;
  for (const PowerSums& p : partials) total.merge(p);

  MonteCarloReport rep;
  rep.Q = Q;
  rep.k = k;
  rep.samples = n;
  rep.seed = seed;
  rep.power_sums = {Rat(int_from_i128((__int128)total.s1)), Rat(int_from_i128((__int128)total.s2)),
                    Rat(int_from_i128((__int128)total.s3)),
                    Rat(int_from_i128((__int128)total.s4))};
  Int nz(static_cast<unsigned long>(n));
  rep.sample_mean = rep.power_sums[0] / Rat(nz);
  // (n*S2 - S1^2) / (n*(n-1))
  Rat num = Rat(nz) * rep.power_sums[1] - rep.power_sums[0] * rep.power_sums[0];
  rep.sample_variance = num / (Rat(nz) * Rat(Int(nz - 1)));
  rep.psi_mass = psi_mass(Q, psi, sieve, k);
  rep.mean_error = rep.sample_mean - rep.psi_mass;
  if (rep.mean_error < 0) rep.mean_error = -rep.mean_error;
  return rep;
}

Rat mc_central_moment(const MonteCarloReport& rep, unsigned p) {
  Rat n(Int(static_cast<unsigned long>(rep.samples)));
  Rat m = rep.sample_mean;
  const auto& s = rep.power_sums;
  if (p == 2) {
    Rat out = s[1] / n - m * m;
    return out;
  }
  if (p == 4) {
    Rat m2 = m * m;
    Rat out = s[3] / n - Rat(4) * m * (s[2] / n) + Rat(6) * m2 * (s[1] / n) - Rat(3) * m2 * m2;
    return out;
  }
  throw std::invalid_argument("mc_central_moment: only p = 2 or 4 supported");
}

}  // namespace dslab
