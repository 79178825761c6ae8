#include <doctest.h>

#include "dslab/weight_funcs.hpp"

using namespace dslab;

namespace {

// Direct double-loop oracle for the divisor sum.
Rat divisor_sum_brute(const WeightFunctionSpec& f, uint32_t n, const FactorSieve& sieve) {
  Rat sum(0);
  for (uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) sum += f.value(d, sieve);
  return sum;
}

}  // namespace

TEST_CASE("weight function values") {
  FactorSieve sieve(20);
  WeightFunctionSpec f1{1};
  CHECK(f1.value(6, sieve) == 2);  // phi(6) = 2
  WeightFunctionSpec f2{2};
  CHECK(f2.value(4, sieve) == 1);        // phi(4)^2 / 4 = 4/4
  CHECK(f2.value(2, sieve) == frac(1, 2));  // 1/2
  CHECK(f2.value(1, sieve) == 1);
}

TEST_CASE("totient identity at k = 1") {
  FactorSieve sieve(5000);
  DivisorBoundResult res = verify_divisor_bound(WeightFunctionSpec{1}, 5000, sieve);
  CHECK(res.holds);
  CHECK(res.worst_ratio == 1);  // equality for every n
  CHECK(res.worst_n == 1);
  CHECK(res.equality_count == 5000);
  // spot equality
  for (uint32_t n : {1u, 12u, 97u, 4096u})
    CHECK(divisor_sum_brute(WeightFunctionSpec{1}, n, sieve) == n);
}

TEST_CASE("divisor bound holds for larger k with strict slack beyond n = 1") {
  FactorSieve sieve(20000);
  for (unsigned k : {2u, 3u, 4u}) {
    DivisorBoundResult res = verify_divisor_bound(WeightFunctionSpec{k}, 20000, sieve);
    CHECK(res.holds);
    CHECK(res.worst_n == 1);
    CHECK(res.worst_ratio == 1);
    CHECK(res.equality_count == 1);  // ratio 1 attained only at n = 1
  }
  // k = 2, n = 4: 1 + 1/2 + 1 = 5/2
  CHECK(divisor_sum_brute(WeightFunctionSpec{2}, 4, sieve) == frac(5, 2));
}

TEST_CASE("sieved accumulation equals the brute oracle") {
  FactorSieve sieve(400);
  for (unsigned k : {1u, 2u, 3u}) {
    WeightFunctionSpec f{k};
    DivisorBoundResult res = verify_divisor_bound(f, 400, sieve);
    CHECK(res.holds);
    for (uint32_t n : {1u, 2u, 36u, 210u, 399u}) {
      Rat direct = divisor_sum_brute(f, n, sieve);
      CHECK(direct <= n);
    }
  }
}

TEST_CASE("argument validation") {
  FactorSieve sieve(10);
  CHECK_THROWS_AS(verify_divisor_bound(WeightFunctionSpec{1}, 0, sieve), std::invalid_argument);
  CHECK_THROWS_AS(verify_divisor_bound(WeightFunctionSpec{1}, 11, sieve), std::invalid_argument);
  CHECK_THROWS_AS(WeightFunctionSpec{0}.value(3, sieve), std::invalid_argument);
}
