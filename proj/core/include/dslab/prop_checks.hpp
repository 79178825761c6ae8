#pragma once

#include <cstdint>
#include <optional>

#include "dslab/bilinear.hpp"
#include "dslab/factor_sieve.hpp"
#include "dslab/hiprec.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"
#include "dslab/variance.hpp"

namespace dslab {

/// Weighted pair sum over 1 <= q, r <= Q with D(q, r) <= y (diagonal
/// included), terms (phi(q) psi(q) / q)^k (phi(r) psi(r) / r)^k, against
/// y^(1-eps) PsiMass^(1+eps).
BoundReport check_prop1(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                        const Rat& epsilon, const Rat& y, unsigned threads = 1,
                        uint32_t budget = kPairSweepBudget);

/// As check_prop1 with the extra filter L_t(q, r) >= 1/s; the right-hand
/// side gains the factor e^(-C t / s).
BoundReport check_prop2(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                        const Rat& epsilon, const Rat& y, const Rat& t, const Rat& s,
                        const Rat& C, unsigned threads = 1, uint32_t budget = kPairSweepBudget);

/// As check_prop1 with the extra filter omega_t(q, r) >= kappa log t; the
/// right-hand side gains the factor t^(-C).
BoundReport check_prop3(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                        const Rat& epsilon, const Rat& y, const Rat& t, const Rat& kappa,
                        const Rat& C, unsigned threads = 1, uint32_t budget = kPairSweepBudget);

enum class OverlapVariant { PV, KMY };

struct OverlapPairReport {
  uint32_t q = 0, r = 0;
  bool disjoint = false;  // D < 1/2 (or a vanishing psi); lhs is exactly zero
  Rat lhs;                // exact lambda_k(A_q^k n A_r^k)
  Rat D;
  DirectedReal rhs_main;
  DirectedReal ratio;
  std::optional<DirectedReal> kmy_error_mag;  // 2^(k omega_t) log(4D) / D
};

/// Per-pair overlap inequality, q != r. PV compares against
/// lambda lambda e^(k L_D); KMY against lambda lambda e^(2k L_t) with the
/// error magnitude reported separately. For D < 1/2 asserts lhs = 0 exactly.
OverlapPairReport check_overlap_lemma(uint32_t q, uint32_t r, const PsiTable& psi,
                                      const FactorSieve& sieve, unsigned k, const Rat& t,
                                      OverlapVariant variant);

struct OverlapSweepReport {
  uint32_t Q = 0;
  unsigned k = 1;
  uint64_t pairs_swept = 0;
  uint64_t disjoint_pairs = 0;    // D < 1/2 or vanishing psi
  uint64_t zero_violations = 0;   // disjoint pairs with nonzero exact overlap
  DirectedReal max_ratio;         // max PV ratio over pairs with D >= 1/2
  uint32_t max_q = 0, max_r = 0;  // where the max is attained
};

/// Exhaustive PV-ratio sweep over q < r <= Q.
OverlapSweepReport overlap_sweep(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                                 unsigned k, unsigned threads = 1,
                                 uint32_t budget = kPairSweepBudget);

}  // namespace dslab
