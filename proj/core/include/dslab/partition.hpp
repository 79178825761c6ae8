#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dslab/factor_sieve.hpp"
#include "dslab/hiprec.hpp"
#include "dslab/psi_table.hpp"
#include "dslab/rational.hpp"
#include "dslab/variance.hpp"

namespace dslab {

/// Classification of an off-diagonal pair. Pairs with a vanishing psi value
/// on either side, and pairs with dilation D < 1/2, are DISJOINT. Among the
/// rest, with t = D^2: E2 when L_t > 1/D; otherwise E1 when
/// omega_t <= (eps/4k) log(2D) and E3 when the omega threshold is exceeded.
enum class PairClass : uint8_t { Disjoint = 0, E1 = 1, E2 = 2, E3 = 3 };

struct DyadicCell {
  uint64_t count = 0;
  Rat lambda_mass;        // sum of lambda_k(A_q^k) * lambda_k(A_r^k)
  DirectedReal weighted;  // sum of lambda_mass terms * D^(-1 + eps/2)
};

struct PartitionReport {
  uint32_t Q = 0;
  unsigned k = 1;
  Rat epsilon;
  Rat psi_mass;

  std::vector<PairClass> class_of;  // indexed by pair_index(q, r)
  std::array<uint64_t, 4> count_by_class{};
  std::array<Rat, 4> lambda_mass_by_class;   // sum lambda*lambda per class
  std::array<Rat, 4> overlap_mass_by_class;  // sum of exact overlaps per class

  int I = 0;                        // smallest i with 2^I >= psi_mass
  std::vector<DyadicCell> dyadic_R;  // E1 cells, D in [2^(i-1), 2^i), i = 0..I
  DyadicCell tail_R_prime;           // E1 cells with D >= 2^I
  std::map<std::pair<int, int>, DyadicCell> e2_buckets;
  std::map<int, DyadicCell> e3_buckets;

  /// Threshold comparisons that the 288-bit directed rounding could not
  /// resolve; flagged rather than silently classified.
  uint64_t borderline_count = 0;

  static size_t pair_index(uint32_t q, uint32_t r, uint32_t Q);
  PairClass at(uint32_t q, uint32_t r) const;
};

PartitionReport classify_pairs(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                               unsigned k, const Rat& epsilon, unsigned threads = 1,
                               uint32_t budget = kPairSweepBudget);

struct PartitionAudit {
  bool reconciled = false;
  Rat diagonal_mass;            // psi mass, the q = r contribution
  Rat off_diagonal_overlap;     // 2 * sum over classified pairs of exact overlap
  Rat overlap_sum_expected;     // from the variance sweep
  std::array<Rat, 4> overlap_mass_by_class;
  std::array<DirectedReal, 4> ratio_vs_psi_power;  // class overlap / psi_mass^(1+eps)
  uint64_t borderline_count = 0;
};

/// Reconciles the partition against the exact variance sweep: diagonal mass
/// plus both ordered copies of every classified overlap must equal the
/// sweep's overlap sum exactly. Throws std::invalid_argument when the two
/// reports describe different runs.
PartitionAudit partition_audit(const PartitionReport& partition, const VarianceReport& variance);

}  // namespace dslab
