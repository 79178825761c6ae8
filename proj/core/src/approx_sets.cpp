#include "dslab/approx_sets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dslab {

namespace {

void check_q(uint32_t q, const PsiTable& psi, const FactorSieve& sieve) {
  if (q == 0) throw std::invalid_argument("q must be >= 1");
  if (q > psi.Q()) throw std::invalid_argument("q exceeds psi support bound");
  if (q > sieve.limit()) throw std::invalid_argument("q exceeds sieve limit");
}

}  // namespace

IntervalUnion build_Aq(uint32_t q, const PsiTable& psi, const FactorSieve& sieve) {
  check_q(q, psi, sieve);
  const Rat& pv = psi.value(q);
  if (pv == 0) return IntervalUnion();
  std::vector<IntervalUnion::Part> parts;
  parts.reserve(sieve.phi(q) + 1);
  Rat qr(static_cast<unsigned long>(q));
  for (uint32_t a = 0; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;  // gcd(0, q) = q keeps a = 0 only for q = 1
    Rat lo = (Rat(static_cast<unsigned long>(a)) - pv) / qr;
    Rat hi = (Rat(static_cast<unsigned long>(a)) + pv) / qr;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    if (lo < hi) parts.emplace_back(std::move(lo), std::move(hi));
  }
  return IntervalUnion::from_parts(std::move(parts));
}

Rat closed_form_mass(uint32_t q, const PsiTable& psi, const FactorSieve& sieve, unsigned k) {
  check_q(q, psi, sieve);
  Rat base = Rat(2) * psi.value(q) * sieve.phi(q) / static_cast<unsigned long>(q);
  return pow_rat(base, k);
}

// ---------------------------------------------------------------------------
// Closed-form pair overlap.
//
// Everything is lifted to the circle R/Z, where A_q becomes the union over
// residues a mod q coprime to q of the arc of radius psi(q)/q around a/q;
// clipping at 0 and 1 is exactly the unwrapping of the arc around 0, so all
// measures agree. Expanding both coprimality conditions by Moebius inversion,
//
//   lambda(A_q n A_r) = sum_{d|q} sum_{e|r} mu(d) mu(e) G(q/d, r/e)
//
// where G(u, v) sums the arc-overlap over the full residue grids i/u, j/v.
// The center differences i/u - j/v run over the multiples of 1/lcm(u,v),
// each class hit gcd(u,v) times, so G = gcd(u,v) * T(lcm(u,v)) with T the
// per-class overlap sum evaluated below in O(1) by an arithmetic series.
// ---------------------------------------------------------------------------

namespace detail {

namespace {

// Sum_{n=1}^{L-1} max(0, min(c - n/L, A)) for 0 <= A <= c. The ramp is capped
// at A on n <= L(c-A) and linear until it hits zero at n = Lc.
Rat capped_ramp_sum(uint64_t L, const Rat& c, const Rat& A) {
  if (L <= 1) return Rat(0);
  Int Lz(static_cast<unsigned long>(L));
  Rat Lc = c * Rat(Lz);
  Int M = ceil_rat(Lc) - 1;  // largest n with c - n/L > 0
  if (M < 0) return Rat(0);
  Int top(Lz - 1);
  if (M > top) M = top;
  Rat LcA = (c - A) * Rat(Lz);
  Int M0 = floor_rat(LcA);  // largest n still capped at A
  if (M0 < 0) M0 = 0;
  if (M0 > M) M0 = M;
  // A*M0 + (M - M0)*c - (M(M+1) - M0(M0+1)) / (2L)
  Int tri = M * (M + 1) - M0 * (M0 + 1);
  Rat out = A * Rat(M0) + Rat(M - M0) * c - frac(tri, Int(2 * Lz));
  return out;
}

}  // namespace

Rat circle_grid_T(uint64_t L, const Rat& delta1, const Rat& delta2) {
  if (delta1 == 0 || delta2 == 0) return Rat(0);
  Rat A = Rat(2) * std::min(delta1, delta2);
  Rat c = delta1 + delta2;
  // Overlap at distance d is front(d) + front(1-d) with
  // front(x) = max(0, min(c - x, A)); summing over n mod L gives
  // front(0) + 2 * sum_{n=1}^{L-1} front(n/L) since front(1) = 0 for c <= 1.
  Rat out = A + Rat(2) * capped_ramp_sum(L, c, A);
  return out;
}

Rat full_grid_overlap(uint32_t u, uint32_t v, const Rat& delta1, const Rat& delta2) {
  uint64_t h = std::gcd(u, v);
  uint64_t L = static_cast<uint64_t>(u) / h * v;
  Rat t = circle_grid_T(L, delta1, delta2);
  return t * Rat(static_cast<unsigned long>(h));
}

Rat pair_overlap_1d_generic(uint32_t q, uint32_t r, const PsiTable& psi,
                            const FactorSieve& sieve) {
  const Rat& pq = psi.value(q);
  const Rat& pr = psi.value(r);
  if (pq == 0 || pr == 0) return Rat(0);
  Rat dq = pq / static_cast<unsigned long>(q);
  Rat dr = pr / static_cast<unsigned long>(r);
  auto divs_q = sieve.squarefree_divisors_mu(q);
  auto divs_r = sieve.squarefree_divisors_mu(r);
  Rat acc(0);
  for (const auto& [d, mu_d] : divs_q) {
    for (const auto& [e, mu_e] : divs_r) {
      Rat g = full_grid_overlap(q / d, r / e, dq, dr);
      if (mu_d * mu_e > 0)
        acc += g;
      else
        acc -= g;
    }
  }
  return acc;
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

struct SmallDelta {
  int64_t num;
  int64_t den;
};

// psi(q)/q as int64 fraction with den <= 2^20, if representable.
bool small_delta(const Rat& psi_q, uint32_t q, SmallDelta& out) {
  if (!psi_q.get_num().fits_slong_p() || !psi_q.get_den().fits_slong_p()) return false;
  int64_t n = psi_q.get_num().get_si();
  int64_t d = psi_q.get_den().get_si();
  if (d > (int64_t{1} << 20) / q) return false;
  int64_t den = d * q;
  int64_t g = std::gcd(n, den);
  out.num = n / g;
  out.den = den / g;
  return true;
}

i128 i128_gcd(i128 a, i128 b) {
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

std::optional<Rat> pair_overlap_1d_fast(uint32_t q, uint32_t r, const PsiTable& psi,
                                        const FactorSieve& sieve) {
  const Rat& pq = psi.value(q);
  const Rat& pr = psi.value(r);
  if (pq == 0 || pr == 0) return Rat(0);
  SmallDelta d1, d2;
  if (!small_delta(pq, q, d1) || !small_delta(pr, r, d2)) return std::nullopt;
  uint64_t L0 = lcm_u64(q, r);
  if (L0 > (uint64_t{1} << 24)) return std::nullopt;

  const i128 B = (i128)d1.den * d2.den;  // <= 2^40
  const i128 x1 = (i128)d1.num * d2.den;
  const i128 x2 = (i128)d2.num * d1.den;
  const i128 nc = x1 + x2;                     // c = nc / B
  const i128 nA = 2 * (x1 < x2 ? x1 : x2);     // A = nA / B
  auto divs_q = sieve.squarefree_divisors_mu(q);
  auto divs_r = sieve.squarefree_divisors_mu(r);

  i128 acc = 0;  // over denominator 2 * L0 * B
  for (const auto& [d, mu_d] : divs_q) {
    uint32_t u = q / d;
    for (const auto& [e, mu_e] : divs_r) {
      uint32_t v = r / e;
      uint64_t h = std::gcd(u, v);
      uint64_t L = static_cast<uint64_t>(u) / h * v;
      // T over denominator 2*L*B: 2*L*nA + 2*S_num, with
      // S_num = 2L*nA*M0 + 2L*nc*(M - M0) - B*(M(M+1) - M0(M0+1)) over 2LB...
      // assembled below directly over 2LB.
      i128 Lc_num = (i128)L * nc;
      i128 M = (Lc_num + B - 1) / B - 1;  // ceil(L*c) - 1
      if (M > (i128)L - 1) M = (i128)L - 1;
      i128 S_num = 0;  // over denominator 2*L*B
      if (M >= 1) {
        i128 M0 = ((i128)L * (nc - nA)) / B;  // floor, args nonnegative
        if (M0 > M) M0 = M;
        if (M0 < 0) M0 = 0;
        i128 tri = M * (M + 1) - M0 * (M0 + 1);
        S_num = 2 * (i128)L * (nA * M0 + nc * (M - M0)) - B * tri;
      }
      i128 T_num = 2 * (i128)L * nA + 2 * S_num;  // over 2*L*B
      i128 contrib = (i128)h * T_num * (i128)(L0 / L);  // over 2*L0*B
      if (mu_d * mu_e > 0)
        acc += contrib;
      else
        acc -= contrib;
    }
  }
  i128 den = 2 * (i128)L0 * B;
  i128 g = i128_gcd(acc, den);
  if (g > 1) {
    acc /= g;
    den /= g;
  }
  return rat_from_i128(acc, den);
}

}  // namespace detail

Rat pair_overlap_1d(uint32_t q, uint32_t r, const PsiTable& psi, const FactorSieve& sieve) {
  check_q(q, psi, sieve);
  check_q(r, psi, sieve);
  std::optional<Rat> fast = detail::pair_overlap_1d_fast(q, r, psi, sieve);
  if (fast) return *std::move(fast);
  return detail::pair_overlap_1d_generic(q, r, psi, sieve);
}

Rat pair_overlap_mass_k(uint32_t q, uint32_t r, const PsiTable& psi, const FactorSieve& sieve,
                        unsigned k) {
  return pow_rat(pair_overlap_1d(q, r, psi, sieve), k);
}

std::optional<uint32_t> coordinate_candidate(const Rat& x, uint32_t q, const Rat& psi_q) {
  if (psi_q == 0) return std::nullopt;
  Rat qx = Rat(static_cast<unsigned long>(q)) * x;
  // a = floor(qx + 1/2); for x in [0,1] this lands in [0, q].
  Int two_num = 2 * qx.get_num() + qx.get_den();
  Int two_den = 2 * qx.get_den();
  Int a;
  mpz_fdiv_q(a.get_mpz_t(), two_num.get_mpz_t(), two_den.get_mpz_t());
  if (a < 0 || a > q) return std::nullopt;
  uint32_t av = static_cast<uint32_t>(a.get_ui());
  if (std::gcd(av, q) != 1) return std::nullopt;  // gcd(0, q) = q: a = 0 only for q = 1
  Rat diff = qx - Rat(a);
  if (diff < 0) diff = -diff;
  if (diff < psi_q) return av;
  return std::nullopt;
}

bool member_k(std::span<const Rat> alpha, uint32_t q, const PsiTable& psi,
              const FactorSieve& sieve) {
  check_q(q, psi, sieve);
  if (alpha.empty()) throw std::invalid_argument("member_k: empty point");
  const Rat& pv = psi.value(q);
  for (const Rat& x : alpha) {
    if (!coordinate_candidate(x, q, pv)) return false;
  }
  return true;
}

WeightTable rescale(const PsiTable& psi, unsigned k, const Rat& y) {
  if (y < 1) throw std::invalid_argument("rescale: y must be >= 1");
  WeightTable out(psi.Q());
  for (uint32_t q = 1; q <= psi.Q(); ++q) {
    const Rat& v = psi.value(q);
    if (v == 0) continue;
    Rat w = pow_rat(v, k) / y;
    out.set(q, std::move(w));
  }
  return out;
}

}  // namespace dslab
