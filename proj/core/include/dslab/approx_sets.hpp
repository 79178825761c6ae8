#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dslab/factor_sieve.hpp"
#include "dslab/interval_union.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"

namespace dslab {

/// The set A_q: union over 0 <= a <= q coprime to q of the open interval
/// ((a - psi(q))/q, (a + psi(q))/q) clipped to [0, 1]. Empty when psi(q) = 0.
/// Requires q <= psi.Q() and q <= sieve.limit().
IntervalUnion build_Aq(uint32_t q, const PsiTable& psi, const FactorSieve& sieve);

/// (2 psi(q) phi(q) / q)^k, the exact k-dimensional mass of A_q^k.
Rat closed_form_mass(uint32_t q, const PsiTable& psi, const FactorSieve& sieve, unsigned k);

/// Exact lambda(A_q n A_r), computed arithmetically (no interval
/// materialization); agrees with measure(intersect(build_Aq(q), build_Aq(r)))
/// for every pair, including q == r.
Rat pair_overlap_1d(uint32_t q, uint32_t r, const PsiTable& psi, const FactorSieve& sieve);

/// Exact lambda_k(A_q^k n A_r^k). The k-fold sets are products of one fixed
/// 1-D set per side, so the overlap is the k-th power of the 1-D overlap.
Rat pair_overlap_mass_k(uint32_t q, uint32_t r, const PsiTable& psi, const FactorSieve& sieve,
                        unsigned k);

/// The unique admissible numerator for one coordinate, if any: the integer a
/// nearest q*x with 0 <= a <= q, gcd(a, q) = 1 and |q*x - a| < psi(q).
/// Since psi <= 1/2 there is at most one candidate.
std::optional<uint32_t> coordinate_candidate(const Rat& x, uint32_t q, const Rat& psi_q);

/// True iff every coordinate of alpha lies in A_q. Decided arithmetically;
/// agrees with interval membership away from the clip points 0 and 1.
bool member_k(std::span<const Rat> alpha, uint32_t q, const PsiTable& psi,
              const FactorSieve& sieve);

/// q maps to psi(q)^k / y on the same support. Values may leave [0, 1/2],
/// so the result is a general weight table. Requires y >= 1.
WeightTable rescale(const PsiTable& psi, unsigned k, const Rat& y);

namespace detail {

/// Sum over ordered residue pairs (i mod u, j mod v) of the circular overlap
/// of arcs of radius delta1 around i/u and delta2 around j/v. Equals
/// gcd(u,v) * circle_grid_T(lcm(u,v), delta1, delta2).
Rat full_grid_overlap(uint32_t u, uint32_t v, const Rat& delta1, const Rat& delta2);

/// T(L, d1, d2) = sum over n mod L of the overlap length of two arcs of radii
/// d1, d2 at circular center distance n/L.
Rat circle_grid_T(uint64_t L, const Rat& delta1, const Rat& delta2);

/// Reference implementation of pair_overlap_1d in all-GMP arithmetic.
Rat pair_overlap_1d_generic(uint32_t q, uint32_t r, const PsiTable& psi, const FactorSieve& sieve);

/// int128 fast path; valid whenever both radii have denominators <= 2^20
/// and lcm(q, r) <= 2^24. Returns nullopt when out of range.
std::optional<Rat> pair_overlap_1d_fast(uint32_t q, uint32_t r, const PsiTable& psi,
                                        const FactorSieve& sieve);

}  // namespace detail

}  // namespace dslab
