#include <doctest.h>

#include <algorithm>

#include "dslab/approx_sets.hpp"
#include "dslab/bilinear.hpp"
#include "dslab/pair_stats.hpp"

using namespace dslab;

namespace {

BilinearWeights weights_from(const WeightTable& w, unsigned k) {
  return BilinearWeights{w, w, WeightFunctionSpec{k}, WeightFunctionSpec{k}};
}

}  // namespace

TEST_CASE("mu sums") {
  FactorSieve sieve(10);
  PsiTable half = PsiTable::constant(3, frac(1, 2));
  BilinearWeights w = weights_from(rescale(half, 1, Rat(1)), 1);
  CHECK(mu_sum(w, Side::V, sieve) == frac(13, 12));
  CHECK(mu_sum(w, Side::W, sieve) == frac(13, 12));

  BilinearWeights empty = weights_from(WeightTable(5), 1);
  CHECK(mu_sum(empty, Side::V, sieve) == 0);

  // single point: mu(v) = f(v) psi(v) / v by definition
  WeightTable one(10);
  one.set(6, frac(2, 3));
  BilinearWeights wo = weights_from(one, 1);
  CHECK(mu_sum(wo, Side::V, sieve) == Rat(2) * frac(2, 3) / 6);
}

TEST_CASE("mu pair sums") {
  FactorSieve sieve(10);
  PsiTable quarter = PsiTable::constant(3, frac(1, 4));
  BilinearWeights w = weights_from(rescale(quarter, 1, Rat(1)), 1);

  PairClassSet empty{PairClassKind::EtK, Rat(1), Rat(0), {}};
  CHECK(mu_pair_sum(w, empty, sieve) == 0);

  PairClassSet single{PairClassKind::EtK, Rat(1), Rat(0), {{2, 3}}};
  CHECK(mu_pair_sum(w, single, sieve) == frac(1, 48));

  // full product factorizes
  PairClassSet full{PairClassKind::EtK, Rat(1), Rat(0), {}};
  for (uint32_t v = 1; v <= 3; ++v)
    for (uint32_t u = 1; u <= 3; ++u) full.pairs.emplace_back(v, u);
  CHECK(mu_pair_sum(w, full, sieve) == mu_sum(w, Side::V, sieve) * mu_sum(w, Side::W, sieve));
}

TEST_CASE("class set construction") {
  FactorSieve sieve(20);
  PsiTable quarter = PsiTable::constant(3, frac(1, 4));
  BilinearWeights w = weights_from(rescale(quarter, 1, Rat(1)), 1);

  // K = 0 with kind E: exactly the pairs with D <= 1
  PairClassSet e0 = build_class_set(w, Rat(1), Rat(0), PairClassKind::EtK, sieve);
  for (uint32_t v = 1; v <= 3; ++v) {
    for (uint32_t u = 1; u <= 3; ++u) {
      bool in = std::find(e0.pairs.begin(), e0.pairs.end(), std::make_pair(v, u)) !=
                e0.pairs.end();
      Rat D = D_of(pair_profile(v, u, sieve), w.psi, w.theta);
      CHECK(in == (D <= 1));
    }
  }
  // the spec pair (2, 3): D = 3/4 <= 1, L_1 = 5/6 >= 1/2
  PairClassSet e = build_class_set(w, Rat(1), frac(1, 2), PairClassKind::EtK, sieve);
  CHECK(std::find(e.pairs.begin(), e.pairs.end(), std::make_pair(2u, 3u)) != e.pairs.end());

  // F with K > pi(t) is empty: omega_t cannot exceed the prime count
  PairClassSet f = build_class_set(w, Rat(3), Rat(3), PairClassKind::FtK, sieve);
  CHECK(f.pairs.empty());

  // monotone in K, and E/F coincide at K = 0 (both reduce to D <= 1)
  PairClassSet eh = build_class_set(w, Rat(1), Rat(1), PairClassKind::EtK, sieve);
  for (const auto& p : eh.pairs)
    CHECK(std::find(e.pairs.begin(), e.pairs.end(), p) != e.pairs.end());
  PairClassSet f0 = build_class_set(w, Rat(1), Rat(0), PairClassKind::FtK, sieve);
  CHECK(f0.pairs == e0.pairs);
}

TEST_CASE("lemma31 report") {
  FactorSieve sieve(100);
  PsiTable quarter = PsiTable::constant(3, frac(1, 4));
  BilinearWeights w = weights_from(rescale(quarter, 1, Rat(1)), 1);

  BoundReport empty = check_lemma31(w, Rat(1), Rat(100), frac(2, 5), sieve);
  CHECK(empty.lhs == 0);
  CHECK(empty.ratio.is_exact_zero());

  BoundReport full = check_lemma31(w, Rat(1), Rat(0), frac(2, 5), sieve);
  // lhs equals the mu mass of all D <= 1 pairs, recomputed directly
  PairClassSet e0 = build_class_set(w, Rat(1), Rat(0), PairClassKind::EtK, sieve);
  CHECK(full.lhs == mu_pair_sum(w, e0, sieve));
  // rhs_main = (mu_V mu_W)^(1/2 + eps) with e^0 = 1
  Rat mu2 = mu_sum(w, Side::V, sieve) * mu_sum(w, Side::W, sieve);
  DirectedReal want = DirectedReal::pow_of(mu2, frac(9, 10));
  CHECK_FALSE(full.rhs_main.lo_below(want));
  CHECK_FALSE(want.lo_below(full.rhs_main));

  PsiTable power = PsiTable::power_law(100, Rat(2));
  BilinearWeights wp = weights_from(rescale(power, 2, Rat(1)), 2);
  BoundReport rep = check_lemma31(wp, Rat(10), frac(1, 2), frac(2, 5), sieve);
  CHECK(rep.lhs >= 0);
  CHECK(rep.metadata.count("front_constant") == 1);

  CHECK_THROWS_AS(check_lemma31(w, Rat(1), Rat(0), frac(1, 2), sieve), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma31(w, Rat(1), Rat(0), Rat(0), sieve), std::invalid_argument);
}

TEST_CASE("lemma32 report") {
  FactorSieve sieve(200);
  PsiTable cluster = PsiTable::cluster(200, frac(1, 2));
  BilinearWeights w = weights_from(rescale(cluster, 1, Rat(2)), 1);

  BoundReport empty = check_lemma32(w, Rat(100), Rat(100), frac(2, 5), Rat(1), sieve);
  CHECK(empty.lhs == 0);

  BoundReport rep = check_lemma32(w, Rat(100), Rat(3), frac(2, 5), Rat(1), sieve);
  CHECK(rep.metadata.count("log_t_power_plain") == 1);
  CHECK(rep.metadata.count("log_t_power_capped") == 1);

  BoundReport t1 = check_lemma32(w, Rat(1), Rat(0), frac(2, 5), Rat(1), sieve);
  CHECK(t1.metadata.at("log_t_power_plain") == "0");
}
