#include "dslab/counting.hpp"

#include <stdexcept>

namespace dslab {

SolutionCount count_solutions(std::span<const Rat> alpha, uint32_t Q, const PsiTable& psi,
                              const FactorSieve& sieve, bool record_witnesses) {
  if (alpha.empty()) throw std::invalid_argument("count_solutions: empty point");
  if (Q == 0) throw std::invalid_argument("count_solutions: Q must be >= 1");
  if (Q > psi.Q()) throw std::invalid_argument("count_solutions: Q exceeds psi support bound");
  if (Q > sieve.limit()) throw std::invalid_argument("count_solutions: Q exceeds sieve limit");
  for (const Rat& x : alpha)
    if (x < 0 || x > 1) throw std::invalid_argument("count_solutions: coordinate outside [0,1]");

  SolutionCount out;
  if (record_witnesses) out.witnesses.emplace();
  std::vector<uint32_t> numerators;
  numerators.reserve(alpha.size());
  for (uint32_t q = 1; q <= Q; ++q) {
    const Rat& pv = psi.value(q);
    if (pv == 0) continue;
    numerators.clear();
    bool ok = true;
    for (const Rat& x : alpha) {
      std::optional<uint32_t> a = coordinate_candidate(x, q, pv);
      if (!a) {
        ok = false;
        break;
      }
      numerators.push_back(*a);
    }
    if (!ok) continue;
    ++out.count;
    if (record_witnesses) out.witnesses->push_back(SolutionWitness{numerators, q});
  }
  return out;
}

Rat psi_mass(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k) {
  if (Q == 0) throw std::invalid_argument("psi_mass: Q must be >= 1");
  if (Q > psi.Q()) throw std::invalid_argument("psi_mass: Q exceeds psi support bound");
  if (Q > sieve.limit()) throw std::invalid_argument("psi_mass: Q exceeds sieve limit");
  Rat sum(0);
  for (uint32_t q = 1; q <= Q; ++q) {
    if (psi.value(q) == 0) continue;
    sum += closed_form_mass(q, psi, sieve, k);
  }
  return sum;
}

}  // namespace dslab
