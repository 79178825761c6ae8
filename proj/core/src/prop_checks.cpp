#include "dslab/prop_checks.hpp"

#include <functional>
#include <stdexcept>

#include "dslab/approx_sets.hpp"
#include "dslab/counting.hpp"
#include "dslab/pair_stats.hpp"
#include "dslab/parallel.hpp"

namespace dslab {

namespace {

void check_sweep(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                 uint32_t budget) {
  if (Q == 0 || k == 0) throw std::invalid_argument("proposition check: Q and k must be >= 1");
  if (Q > budget) throw std::invalid_argument("proposition check: Q exceeds the pair-sweep budget");
  if (Q > psi.Q() || Q > sieve.limit())
    throw std::invalid_argument("proposition check: Q outside table range");
}

struct PropPartial {
  Rat sum;
  uint64_t borderline = 0;
  PropPartial() : sum(0) {}
};

// Shared sweep: sum of w(q) w(r) over ordered pairs with D <= y and an
// optional extra filter; the filter may flag borderline threshold decisions.
PropPartial prop_pair_sum(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                          const Rat& y, unsigned threads,
                          const std::function<bool(const PairArithProfile&, uint64_t&)>& extra) {
  std::vector<Rat> w(Q + 1, Rat(0));
  std::vector<uint32_t> support;
  for (uint32_t q = 1; q <= Q; ++q) {
    const Rat& v = psi.value(q);
    if (v == 0) continue;
    support.push_back(q);
    Rat base = Rat(static_cast<unsigned long>(sieve.phi(q))) * v / static_cast<unsigned long>(q);
    w[q] = pow_rat(base, k);
  }
  size_t n = support.size();
  std::vector<PropPartial> partials = run_chunked<PropPartial>(
      0, n, threads, kDefaultChunks, [&](uint64_t, uint64_t b, uint64_t e) {
        PropPartial part;
        for (uint64_t ri = b; ri < e; ++ri) {
          uint32_t r = support[ri];
          // Diagonal q = r: D(q, q) = psi(q) <= 1/2 <= y always qualifies.
          {
            PairArithProfile prof = pair_profile(r, r, sieve);
            if (extra(prof, part.borderline)) part.sum += w[r] * w[r];
          }
          for (uint64_t qi = 0; qi < ri; ++qi) {
            uint32_t q = support[qi];
            PairArithProfile prof = pair_profile(q, r, sieve);
            Rat D = D_of(prof, psi);
            if (D > y) continue;
            if (!extra(prof, part.borderline)) continue;
            part.sum += 2 * (w[q] * w[r]);
          }
        }
        return part;
      });
  PropPartial total;
  for (PropPartial& p : partials) {
    total.sum += p.sum;
    total.borderline += p.borderline;
  }
  return total;
}

DirectedReal ratio_of(const Rat& lhs, const DirectedReal& rhs) {
  if (lhs == 0) return DirectedReal();
  return DirectedReal(lhs) / rhs;
}

// y^(1-eps) * PsiMass^(1+eps) (times an optional extra factor).
DirectedReal prop_rhs(const Rat& y, const Rat& epsilon, const Rat& mass,
                      const DirectedReal* extra) {
  if (mass == 0) return DirectedReal();
  DirectedReal rhs = dpow(DirectedReal(y), DirectedReal(Rat(1) - epsilon)) *
                     dpow(DirectedReal(mass), DirectedReal(Rat(1) + epsilon));
  if (extra) rhs = rhs * (*extra);
  return rhs;
}

}  // namespace

BoundReport check_prop1(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                        const Rat& epsilon, const Rat& y, unsigned threads, uint32_t budget) {
  check_sweep(Q, psi, sieve, k, budget);
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("check_prop1: epsilon must lie in (0, 1)");
  if (y < 1) throw std::invalid_argument("check_prop1: y must be >= 1");
  BoundReport rep;
  rep.name = "prop1";
  PropPartial lhs = prop_pair_sum(Q, psi, sieve, k, y, threads,
                                  [](const PairArithProfile&, uint64_t&) { return true; });
  rep.lhs = lhs.sum;
  Rat mass = psi_mass(Q, psi, sieve, k);
  rep.rhs_main = prop_rhs(y, epsilon, mass, nullptr);
  rep.ratio = rep.lhs == 0 ? DirectedReal() : ratio_of(rep.lhs, rep.rhs_main);
  rep.params["Q"] = std::to_string(Q);
  rep.params["k"] = std::to_string(k);
  rep.params["epsilon"] = rat_str(epsilon);
  rep.params["y"] = rat_str(y);
  rep.metadata["psi_mass"] = rat_str(mass);
  return rep;
}

BoundReport check_prop2(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                        const Rat& epsilon, const Rat& y, const Rat& t, const Rat& s,
                        const Rat& C, unsigned threads, uint32_t budget) {
  check_sweep(Q, psi, sieve, k, budget);
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("check_prop2: epsilon must lie in (0, 1)");
  if (y < 1 || t < 1 || s < 1) throw std::invalid_argument("check_prop2: y, t, s must be >= 1");
  if (C < 1) throw std::invalid_argument("check_prop2: C must be >= 1");
  BoundReport rep;
  rep.name = "prop2";
  Rat inv_s = Rat(1) / s;
  PropPartial lhs =
      prop_pair_sum(Q, psi, sieve, k, y, threads,
                    [&](const PairArithProfile& prof, uint64_t&) { return L_t(prof, t) >= inv_s; });
  rep.lhs = lhs.sum;
  Rat mass = psi_mass(Q, psi, sieve, k);
  Rat neg_cts = -(C * t / s);
  DirectedReal extra = DirectedReal::exp_of(neg_cts);
  rep.rhs_main = prop_rhs(y, epsilon, mass, &extra);
  rep.ratio = rep.lhs == 0 ? DirectedReal() : ratio_of(rep.lhs, rep.rhs_main);
  rep.params["Q"] = std::to_string(Q);
  rep.params["k"] = std::to_string(k);
  rep.params["epsilon"] = rat_str(epsilon);
  rep.params["y"] = rat_str(y);
  rep.params["t"] = rat_str(t);
  rep.params["s"] = rat_str(s);
  rep.params["C"] = rat_str(C);
  rep.metadata["psi_mass"] = rat_str(mass);
  return rep;
}

BoundReport check_prop3(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                        const Rat& epsilon, const Rat& y, const Rat& t, const Rat& kappa,
                        const Rat& C, unsigned threads, uint32_t budget) {
  check_sweep(Q, psi, sieve, k, budget);
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("check_prop3: epsilon must lie in (0, 1)");
  if (y < 1 || t < 1) throw std::invalid_argument("check_prop3: y, t must be >= 1");
  if (kappa <= 0) throw std::invalid_argument("check_prop3: kappa must be positive");
  if (C < 1) throw std::invalid_argument("check_prop3: C must be >= 1");
  BoundReport rep;
  rep.name = "prop3";
  // omega_t >= kappa log t  <=>  exp(omega / kappa) >= t, resolved with
  // outward rounding; straddles count as satisfied and are flagged.
  auto filter = [&](const PairArithProfile& prof, uint64_t& borderline) {
    unsigned omega = omega_t(prof, t);
    Rat arg = Rat(static_cast<long>(omega)) / kappa;
    DirectedReal lhs = DirectedReal::exp_of(arg);
    if (lhs.definitely_ge(t)) return true;
    if (lhs.definitely_lt(t)) return false;
    ++borderline;
    return true;
  };
  PropPartial lhs = prop_pair_sum(Q, psi, sieve, k, y, threads, filter);
  rep.lhs = lhs.sum;
  rep.borderline_count = lhs.borderline;
  Rat mass = psi_mass(Q, psi, sieve, k);
  DirectedReal extra = dpow(DirectedReal(t), DirectedReal(-C));
  rep.rhs_main = prop_rhs(y, epsilon, mass, &extra);
  rep.ratio = rep.lhs == 0 ? DirectedReal() : ratio_of(rep.lhs, rep.rhs_main);
  rep.params["Q"] = std::to_string(Q);
  rep.params["k"] = std::to_string(k);
  rep.params["epsilon"] = rat_str(epsilon);
  rep.params["y"] = rat_str(y);
  rep.params["t"] = rat_str(t);
  rep.params["kappa"] = rat_str(kappa);
  rep.params["C"] = rat_str(C);
  rep.metadata["psi_mass"] = rat_str(mass);
  return rep;
}

OverlapPairReport check_overlap_lemma(uint32_t q, uint32_t r, const PsiTable& psi,
                                      const FactorSieve& sieve, unsigned k, const Rat& t,
                                      OverlapVariant variant) {
  if (q == r) throw std::invalid_argument("check_overlap_lemma: q and r must differ");
  if (k == 0) throw std::invalid_argument("check_overlap_lemma: k must be >= 1");
  if (t < 1) throw std::invalid_argument("check_overlap_lemma: t must be >= 1");
  OverlapPairReport rep;
  rep.q = q;
  rep.r = r;
  rep.lhs = pair_overlap_mass_k(q, r, psi, sieve, k);
  PairArithProfile prof = pair_profile(q, r, sieve);
  rep.D = D_of(prof, psi);
  if (psi.value(q) == 0 || psi.value(r) == 0 || rep.D < frac(1, 2)) {
    rep.disjoint = true;
    if (rep.lhs != 0)
      throw std::logic_error("check_overlap_lemma: disjoint pair with nonzero overlap");
    rep.rhs_main = DirectedReal();
    rep.ratio = DirectedReal();
    return rep;
  }
  Rat lam = closed_form_mass(q, psi, sieve, k) * closed_form_mass(r, psi, sieve, k);
  if (variant == OverlapVariant::PV) {
    Rat kl = Rat(static_cast<long>(k)) * L_t(prof, rep.D);
    rep.rhs_main = DirectedReal(lam) * DirectedReal::exp_of(kl);
  } else {
    Rat kl = Rat(2L * k) * L_t(prof, t);
    rep.rhs_main = DirectedReal(lam) * DirectedReal::exp_of(kl);
    unsigned omega = omega_t(prof, t);
    Int two_pow(1);
    two_pow <<= static_cast<unsigned>(k) * omega;
    Rat four_d = 4 * rep.D;
    DirectedReal err = DirectedReal(Rat(two_pow)) * dlog(DirectedReal(four_d)) /
                       DirectedReal(rep.D);
    rep.kmy_error_mag = err;
  }
  rep.ratio = rep.lhs == 0 ? DirectedReal() : DirectedReal(rep.lhs) / rep.rhs_main;
  return rep;
}

OverlapSweepReport overlap_sweep(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                                 unsigned k, unsigned threads, uint32_t budget) {
  check_sweep(Q, psi, sieve, k, budget);
  struct Partial {
    uint64_t pairs = 0, disjoint = 0, violations = 0;
    bool has_max = false;
    DirectedReal max_ratio;
    uint32_t mq = 0, mr = 0;
  };
  std::vector<Rat> lam(Q + 1, Rat(0));
  for (uint32_t q = 1; q <= Q; ++q)
    if (psi.value(q) != 0) lam[q] = closed_form_mass(q, psi, sieve, k);
  std::vector<Partial> partials = run_chunked<Partial>(
      2, static_cast<uint64_t>(Q) + 1, threads, kDefaultChunks,
      [&](uint64_t, uint64_t rb, uint64_t re) {
        Partial part;
        for (uint32_t r = static_cast<uint32_t>(rb); r < re; ++r) {
          for (uint32_t q = 1; q < r; ++q) {
            ++part.pairs;
            Rat ov = pair_overlap_1d(q, r, psi, sieve);
            bool zero_psi = psi.value(q) == 0 || psi.value(r) == 0;
            Rat D(0);
            if (!zero_psi) {
              PairArithProfile prof = pair_profile(q, r, sieve);
              D = D_of(prof, psi);
              if (D >= frac(1, 2)) {
                if (ov == 0) continue;  // zero overlap contributes ratio 0
                Rat lhs = pow_rat(ov, k);
                Rat kl = Rat(static_cast<long>(k)) * L_t(prof, D);
                DirectedReal rhs = DirectedReal(lam[q] * lam[r]) * DirectedReal::exp_of(kl);
                DirectedReal ratio = DirectedReal(lhs) / rhs;
                // Track the maximum by interval low end; deterministic.
                if (!part.has_max || part.max_ratio.lo_below(ratio)) {
                  part.max_ratio = ratio;
                  part.mq = q;
                  part.mr = r;
                  part.has_max = true;
                }
                continue;
              }
            }
            ++part.disjoint;
            if (ov != 0) ++part.violations;
          }
        }
        return part;
      });
  OverlapSweepReport rep;
  rep.Q = Q;
  rep.k = k;
  for (Partial& p : partials) {
    rep.pairs_swept += p.pairs;
    rep.disjoint_pairs += p.disjoint;
    rep.zero_violations += p.violations;
    if (p.has_max && (rep.max_q == 0 || rep.max_ratio.lo_below(p.max_ratio))) {
      rep.max_ratio = p.max_ratio;
      rep.max_q = p.mq;
      rep.max_r = p.mr;
    }
  }
  return rep;
}

}  // namespace dslab
