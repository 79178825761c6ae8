#include <doctest.h>

#include "dslab/approx_sets.hpp"
#include "dslab/pair_stats.hpp"
#include "dslab/partition.hpp"

using namespace dslab;

TEST_CASE("pair classification examples") {
  FactorSieve sieve(10);
  PsiTable eighth = PsiTable::constant(10, frac(1, 8));
  PartitionReport rep8 = classify_pairs(3, eighth, sieve, 2, frac(1, 2));
  CHECK(rep8.at(2, 3) == PairClass::Disjoint);  // D = 3/8 < 1/2

  PsiTable quarter = PsiTable::constant(10, frac(1, 4));
  PartitionReport rep4 = classify_pairs(3, quarter, sieve, 2, frac(1, 2));
  // D = 3/4, L_{9/16} = 5/6 <= 1/D = 4/3 and omega_{9/16} = 0 below threshold
  CHECK(rep4.at(2, 3) == PairClass::E1);
  CHECK(rep4.borderline_count == 0);
}

TEST_CASE("classes partition all pairs") {
  FactorSieve sieve(60);
  PsiTable psi = PsiTable::primes_only(60, frac(1, 2), sieve);
  PartitionReport rep = classify_pairs(60, psi, sieve, 1, frac(3, 10));
  uint64_t total = 0;
  for (uint64_t c : rep.count_by_class) total += c;
  CHECK(total == uint64_t{60} * 59 / 2);
  // pairs with a vanishing psi value land in DISJOINT
  CHECK(rep.at(4, 8) == PairClass::Disjoint);
  // and class_of is consistent with the counters
  std::array<uint64_t, 4> recount{};
  for (uint32_t r = 2; r <= 60; ++r)
    for (uint32_t q = 1; q < r; ++q) ++recount[static_cast<size_t>(rep.at(q, r))];
  CHECK(recount == rep.count_by_class);
}

TEST_CASE("disjoint class matches the dilation test and overlaps vanish") {
  FactorSieve sieve(60);
  PsiTable psi = PsiTable::power_law(60, Rat(2));
  PartitionReport rep = classify_pairs(60, psi, sieve, 2, frac(1, 2));
  std::vector<IntervalUnion> sets(61);
  for (uint32_t q = 1; q <= 60; ++q) sets[q] = build_Aq(q, psi, sieve);
  for (uint32_t r = 2; r <= 60; ++r) {
    for (uint32_t q = 1; q < r; ++q) {
      Rat D = D_of(pair_profile(q, r, sieve), psi);
      bool disjoint_by_rule =
          psi.value(q) == 0 || psi.value(r) == 0 || D < frac(1, 2);
      CHECK((rep.at(q, r) == PairClass::Disjoint) == disjoint_by_rule);
      if (disjoint_by_rule) CHECK(intersect(sets[q], sets[r]).empty());
    }
  }
  CHECK(rep.overlap_mass_by_class[0] == 0);
}

TEST_CASE("dyadic cells partition the E1 mass") {
  FactorSieve sieve(128);
  PsiTable psi = PsiTable::constant(128, frac(1, 2));
  Rat eps = frac(1, 2);
  PartitionReport rep = classify_pairs(128, psi, sieve, 2, eps);

  // I is the least power with 2^I >= psi mass
  Rat mass = rep.psi_mass;
  Rat p(1);
  int I = 0;
  while (p < mass) {
    p *= 2;
    ++I;
  }
  CHECK(rep.I == I);

  // cell masses and counts add back up to the E1 class
  uint64_t cells_count = rep.tail_R_prime.count;
  Rat cells_mass = rep.tail_R_prime.lambda_mass;
  for (const DyadicCell& cell : rep.dyadic_R) {
    cells_count += cell.count;
    cells_mass += cell.lambda_mass;
  }
  CHECK(cells_count == rep.count_by_class[1]);
  CHECK(cells_mass == rep.lambda_mass_by_class[1]);

  // recompute each E1 pair's dyadic index against the report
  std::vector<uint64_t> counts(rep.I + 1, 0);
  uint64_t tail = 0;
  for (uint32_t r = 2; r <= 128; ++r) {
    for (uint32_t q = 1; q < r; ++q) {
      if (rep.at(q, r) != PairClass::E1) continue;
      Rat D = D_of(pair_profile(q, r, sieve), psi);
      int i = 0;
      Rat hi(1);
      while (D >= hi) {
        hi *= 2;
        ++i;
      }
      if (i <= rep.I)
        ++counts[i];
      else
        ++tail;
    }
  }
  for (int i = 0; i <= rep.I; ++i) CHECK(counts[i] == rep.dyadic_R[i].count);
  CHECK(tail == rep.tail_R_prime.count);
}

TEST_CASE("e2 and e3 bucket masses add up to their classes") {
  FactorSieve sieve(512);
  PsiTable psi = PsiTable::cluster(512, frac(1, 2));
  PartitionReport rep = classify_pairs(512, psi, sieve, 1, frac(3, 10));
  Rat e2_mass(0);
  uint64_t e2_count = 0;
  for (const auto& [key, cell] : rep.e2_buckets) {
    CHECK(key.second >= key.first);
    e2_mass += cell.lambda_mass;
    e2_count += cell.count;
  }
  CHECK(e2_mass == rep.lambda_mass_by_class[2]);
  CHECK(e2_count == rep.count_by_class[2]);
  Rat e3_mass(0);
  uint64_t e3_count = 0;
  for (const auto& [key, cell] : rep.e3_buckets) {
    CHECK(key >= 0);
    e3_mass += cell.lambda_mass;
    e3_count += cell.count;
  }
  CHECK(e3_mass == rep.lambda_mass_by_class[3]);
  CHECK(e3_count == rep.count_by_class[3]);
}

TEST_CASE("audit reconciles partition with the variance sweep") {
  FactorSieve sieve(50);
  PsiTable half = PsiTable::constant(50, frac(1, 2));
  for (unsigned k : {1u, 2u}) {
    PartitionReport part = classify_pairs(50, half, sieve, k, frac(1, 2));
    VarianceReport var = exact_variance(50, half, sieve, k);
    PartitionAudit audit = partition_audit(part, var);
    CHECK(audit.reconciled);
    CHECK(audit.diagonal_mass + audit.off_diagonal_overlap == var.overlap_sum);
  }
  // the two-element case by hand: only the pair (1, 2), class E1
  FactorSieve s2(2);
  PsiTable h2 = PsiTable::constant(2, frac(1, 2));
  PartitionReport p2 = classify_pairs(2, h2, s2, 1, frac(1, 2));
  CHECK(p2.at(1, 2) == PairClass::E1);
  VarianceReport v2 = exact_variance(2, h2, s2, 1);
  PartitionAudit a2 = partition_audit(p2, v2);
  CHECK(a2.reconciled);
  CHECK(a2.off_diagonal_overlap == 1);

  // mismatched runs are rejected
  CHECK_THROWS_AS(partition_audit(p2, exact_variance(2, h2, s2, 2)), std::invalid_argument);
}

TEST_CASE("empty psi yields an empty partition") {
  FactorSieve sieve(8);
  PsiTable zero = PsiTable::constant(8, Rat(0));
  PartitionReport rep = classify_pairs(8, zero, sieve, 1, frac(1, 2));
  CHECK(rep.count_by_class[0] == uint64_t{8} * 7 / 2);
  CHECK(rep.count_by_class[1] == 0);
  CHECK(rep.psi_mass == 0);
  CHECK(rep.I == 0);  // 2^0 >= 0
  VarianceReport var = exact_variance(8, zero, sieve, 1);
  PartitionAudit audit = partition_audit(rep, var);
  CHECK(audit.reconciled);
}

TEST_CASE("threads do not change the partition") {
  FactorSieve sieve(90);
  PsiTable psi = PsiTable::power_law(90, Rat(2));
  PartitionReport a = classify_pairs(90, psi, sieve, 2, frac(1, 2), 1);
  PartitionReport b = classify_pairs(90, psi, sieve, 2, frac(1, 2), 4);
  CHECK(a.class_of == b.class_of);
  CHECK(a.lambda_mass_by_class == b.lambda_mass_by_class);
  CHECK(a.overlap_mass_by_class == b.overlap_mass_by_class);
}
