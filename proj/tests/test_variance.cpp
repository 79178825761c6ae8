#include <doctest.h>

#include "dslab/approx_sets.hpp"
#include "dslab/variance.hpp"

using namespace dslab;

namespace {

// Independent oracle: the full quadratic sweep through the interval engine.
Rat overlap_sum_brute(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k) {
  std::vector<IntervalUnion> sets(Q + 1);
  for (uint32_t q = 1; q <= Q; ++q) sets[q] = build_Aq(q, psi, sieve);
  Rat sum(0);
  for (uint32_t q = 1; q <= Q; ++q)
    for (uint32_t r = 1; r <= Q; ++r)
      sum += pow_rat(intersect(sets[q], sets[r]).measure(), k);
  return sum;
}

}  // namespace

TEST_CASE("variance spot values") {
  FactorSieve sieve(4);
  PsiTable half = PsiTable::constant(4, frac(1, 2));
  VarianceReport r1 = exact_variance(1, half, sieve, 1);
  CHECK(r1.psi_mass == 1);
  CHECK(r1.overlap_sum == 1);
  CHECK(r1.variance == 0);

  VarianceReport r2 = exact_variance(2, half, sieve, 1);
  CHECK(r2.psi_mass == frac(3, 2));
  CHECK(r2.overlap_sum == frac(5, 2));
  CHECK(r2.variance == frac(1, 4));
  CHECK(r2.excess == r2.variance - r2.psi_mass);

  PsiTable zero = PsiTable::constant(4, Rat(0));
  VarianceReport rz = exact_variance(4, zero, sieve, 2);
  CHECK(rz.psi_mass == 0);
  CHECK(rz.overlap_sum == 0);
  CHECK(rz.variance == 0);
}

TEST_CASE("variance equals the brute interval sweep") {
  FactorSieve sieve(40);
  std::vector<PsiTable> tables;
  tables.push_back(PsiTable::constant(40, frac(1, 2)));
  tables.push_back(PsiTable::power_law(40, Rat(2)));
  tables.push_back(PsiTable::primes_only(40, frac(1, 2), sieve));
  tables.push_back(PsiTable::cluster(40, frac(1, 2), 6));
  for (const PsiTable& psi : tables) {
    for (unsigned k = 1; k <= 2; ++k) {
      VarianceReport rep = exact_variance(40, psi, sieve, k);
      Rat brute = overlap_sum_brute(40, psi, sieve, k);
      CHECK(rep.overlap_sum == brute);
      CHECK(rep.variance == brute - rep.psi_mass * rep.psi_mass);
      CHECK(rep.variance >= 0);
    }
  }
}

TEST_CASE("ladder rows match standalone sweeps") {
  FactorSieve sieve(64);
  PsiTable psi = PsiTable::constant(64, frac(1, 2));
  std::vector<uint32_t> cps{1, 2, 7, 16, 33, 64};
  std::vector<VarianceReport> rows = exact_variance_ladder(64, psi, sieve, 2, cps);
  REQUIRE(rows.size() == cps.size());
  for (size_t i = 0; i < cps.size(); ++i) {
    VarianceReport one = exact_variance(cps[i], psi, sieve, 2);
    CHECK(rows[i].Q == cps[i]);
    CHECK(rows[i].psi_mass == one.psi_mass);
    CHECK(rows[i].overlap_sum == one.overlap_sum);
    CHECK(rows[i].variance == one.variance);
  }
}

TEST_CASE("thread count does not change the exact sweep") {
  FactorSieve sieve(80);
  PsiTable psi = PsiTable::power_law(80, Rat(2));
  VarianceReport a = exact_variance(80, psi, sieve, 2, 1);
  VarianceReport b = exact_variance(80, psi, sieve, 2, 4);
  CHECK(a.overlap_sum == b.overlap_sum);
  CHECK(a.variance == b.variance);
}

TEST_CASE("budget and argument validation") {
  FactorSieve sieve(10);
  PsiTable psi = PsiTable::constant(10, frac(1, 2));
  CHECK_THROWS_AS(exact_variance(10, psi, sieve, 1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(exact_variance(0, psi, sieve, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_variance(10, psi, sieve, 0), std::invalid_argument);
  std::vector<uint32_t> bad{5, 5};
  CHECK_THROWS_AS(exact_variance_ladder(10, psi, sieve, 1, bad), std::invalid_argument);
  std::vector<uint32_t> high{11};
  CHECK_THROWS_AS(exact_variance_ladder(10, psi, sieve, 1, high), std::invalid_argument);
}
