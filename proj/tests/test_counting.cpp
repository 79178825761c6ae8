#include <doctest.h>

#include <random>

#include "dslab/counting.hpp"
#include "test_util.hpp"

using namespace dslab;
using dslab_test::random_rat_closed;

TEST_CASE("count_solutions examples") {
  FactorSieve sieve(10);
  PsiTable quarter = PsiTable::constant(10, frac(1, 4));

  // alpha = 0: only (a, q) = (0, 1) qualifies since gcd(0, q) = q
  std::vector<Rat> zero{Rat(0), Rat(0), Rat(0)};
  SolutionCount c0 = count_solutions(zero, 8, quarter, sieve, true);
  CHECK(c0.count == 1);
  REQUIRE(c0.witnesses.has_value());
  REQUIRE(c0.witnesses->size() == 1);
  CHECK((*c0.witnesses)[0].q == 1);
  CHECK((*c0.witnesses)[0].a == std::vector<uint32_t>{0, 0, 0});

  std::vector<Rat> half{frac(1, 2)};
  SolutionCount c1 = count_solutions(half, 3, quarter, sieve, true);
  CHECK(c1.count == 1);
  CHECK((*c1.witnesses)[0].q == 2);
  CHECK((*c1.witnesses)[0].a == std::vector<uint32_t>{1});

  SolutionCount c2 = count_solutions(half, 1, quarter, sieve);
  CHECK(c2.count == 0);
  CHECK_FALSE(c2.witnesses.has_value());

  CHECK_THROWS_AS(count_solutions(half, 11, quarter, sieve), std::invalid_argument);
  CHECK_THROWS_AS(count_solutions(std::vector<Rat>{}, 3, quarter, sieve), std::invalid_argument);
  CHECK_THROWS_AS(count_solutions(std::vector<Rat>{Rat(2)}, 3, quarter, sieve),
                  std::invalid_argument);
}

TEST_CASE("witnesses satisfy the defining inequalities") {
  FactorSieve sieve(60);
  PsiTable psi = PsiTable::power_law(60, Rat(2));
  std::mt19937_64 rng(17);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rat> alpha{random_rat_closed(rng), random_rat_closed(rng)};
    SolutionCount sc = count_solutions(alpha, 60, psi, sieve, true);
    CHECK(sc.count == sc.witnesses->size());
    for (const SolutionWitness& w : *sc.witnesses) {
      CHECK(w.q >= 1);
      CHECK(w.q <= 60);
      for (size_t i = 0; i < alpha.size(); ++i) {
        uint32_t a = w.a[i];
        CHECK(a <= w.q);
        CHECK(std::gcd(a, w.q) == 1);
        Rat diff = Rat(static_cast<unsigned long>(w.q)) * alpha[i] - a;
        if (diff < 0) diff = -diff;
        CHECK(diff < psi.value(w.q));
      }
    }
  }
}

TEST_CASE("psi_mass examples") {
  FactorSieve sieve(10);
  PsiTable half = PsiTable::constant(10, frac(1, 2));
  CHECK(psi_mass(3, half, sieve, 1) == frac(13, 6));
  CHECK(psi_mass(3, half, sieve, 2) == frac(61, 36));
  PsiTable zero = PsiTable::constant(10, Rat(0));
  CHECK(psi_mass(10, zero, sieve, 1) == 0);
}

TEST_CASE("indicator identity and monotonicity") {
  FactorSieve sieve(120);
  PsiTable psi = PsiTable::constant(120, frac(1, 2));
  std::mt19937_64 rng(41);
  for (unsigned k = 1; k <= 3; ++k) {
    for (int it = 0; it < 40; ++it) {
      std::vector<Rat> alpha;
      for (unsigned j = 0; j < k; ++j) alpha.push_back(random_rat_closed(rng));
      uint64_t sum = 0;
      uint64_t prev = 0;
      for (uint32_t q = 1; q <= 120; ++q) {
        if (member_k(alpha, q, psi, sieve)) ++sum;
        if (q % 40 == 0) {
          uint64_t c = count_solutions(alpha, q, psi, sieve).count;
          CHECK(c == sum);
          CHECK(c >= prev);  // nondecreasing in Q
          prev = c;
        }
      }
    }
  }
  // psi_mass nondecreasing in Q
  Rat prev_mass(0);
  for (uint32_t q = 1; q <= 120; ++q) {
    Rat m = psi_mass(q, psi, sieve, 2);
    CHECK(m >= prev_mass);
    prev_mass = m;
  }
}
