#include <doctest.h>

#include <random>

#include "dslab/pair_stats.hpp"

using namespace dslab;

TEST_CASE("pair profile examples") {
  FactorSieve sieve(100);
  PairArithProfile p = pair_profile(12, 10, sieve);
  CHECK(p.g == 2);
  CHECK(p.l == 60);
  CHECK(p.core == 30);
  CHECK(p.core_primes == std::vector<uint32_t>{2, 3, 5});

  PairArithProfile eq = pair_profile(7, 7, sieve);
  CHECK(eq.core == 1);
  CHECK(eq.core_primes.empty());

  PairArithProfile cop = pair_profile(4, 9, sieve);
  CHECK(cop.g == 1);
  CHECK(cop.core == 36);
  CHECK(cop.core_primes == std::vector<uint32_t>{2, 3});

  CHECK_THROWS_AS(pair_profile(101, 3, sieve), std::invalid_argument);
  CHECK_THROWS_AS(pair_profile(0, 3, sieve), std::invalid_argument);
}

TEST_CASE("omega and L examples") {
  FactorSieve sieve(100);
  PairArithProfile p = pair_profile(12, 10, sieve);
  CHECK(omega_t(p, Rat(3)) == 2);
  CHECK(omega_t(p, Rat(5)) == 3);
  CHECK(L_t(p, Rat(3)) == frac(1, 5));
  CHECK(L_t(p, Rat(1)) == frac(31, 30));
  PairArithProfile eq = pair_profile(9, 9, sieve);
  CHECK(omega_t(eq, Rat(100)) == 0);
  CHECK(L_t(eq, Rat(1)) == 0);
}

TEST_CASE("omega respects rational thresholds") {
  FactorSieve sieve(100);
  PairArithProfile p = pair_profile(12, 10, sieve);
  CHECK(omega_t(p, frac(9, 16)) == 0);   // no prime <= 9/16
  CHECK(omega_t(p, frac(5, 2)) == 1);    // only 2
  CHECK(L_t(p, frac(9, 16)) == frac(31, 30));
}

TEST_CASE("D examples") {
  FactorSieve sieve(100);
  PsiTable quarter = PsiTable::constant(50, frac(1, 4));
  PsiTable eighth = PsiTable::constant(50, frac(1, 8));
  CHECK(D_of(pair_profile(2, 3, sieve), quarter) == frac(3, 4));
  CHECK(D_of(pair_profile(2, 3, sieve), eighth) == frac(3, 8));
  CHECK(D_of(pair_profile(6, 6, sieve), quarter) == frac(1, 4));
}

TEST_CASE("pair statistics properties on random pairs") {
  FactorSieve sieve(300);
  PsiTable psi = PsiTable::constant(300, frac(1, 3));
  PsiTable theta = PsiTable::constant(300, frac(1, 7));
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 500; ++it) {
    uint32_t q = rng() % 300 + 1;
    uint32_t r = rng() % 300 + 1;
    PairArithProfile p = pair_profile(q, r, sieve);
    // core * g^2 = q * r, g * l = q * r
    CHECK(p.core * p.g * p.g == uint64_t{q} * r);
    CHECK(uint64_t{p.g} * p.l == uint64_t{q} * r);
    CHECK((p.core == 1) == (q == r));
    // omega_t + #{p > t} = total, monotonicity in t
    Rat prev_L = L_t(p, Rat(1));
    unsigned prev_omega = omega_t(p, Rat(1));
    for (long t : {2L, 3L, 7L, 50L}) {
      unsigned above = 0;
      for (uint32_t cp : p.core_primes)
        if (cp > t) ++above;
      CHECK(omega_t(p, Rat(t)) + above == p.core_primes.size());
      CHECK(L_t(p, Rat(t)) <= prev_L);
      CHECK(omega_t(p, Rat(t)) >= prev_omega);
      prev_L = L_t(p, Rat(t));
      prev_omega = omega_t(p, Rat(t));
    }
    // D symmetry under swapping (q, psi) with (r, theta)
    PairArithProfile pr = pair_profile(r, q, sieve);
    CHECK(D_of(p, psi.weights(), theta.weights()) == D_of(pr, theta.weights(), psi.weights()));
    // lcm form: D = lcm(q, r) * max(psi(q)/q, psi(r)/r)
    Rat lcm_form = Rat(Int(static_cast<unsigned long>(p.l))) *
                   std::max(psi.value(q) / q, psi.value(r) / r);
    CHECK(D_of(p, psi.weights(), psi.weights()) == lcm_form);
  }
}
