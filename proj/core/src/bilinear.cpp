#include "dslab/bilinear.hpp"

#include <stdexcept>

#include "dslab/pair_stats.hpp"

namespace dslab {

namespace {

const WeightTable& table_of(const BilinearWeights& w, Side side) {
  return side == Side::V ? w.psi : w.theta;
}

const WeightFunctionSpec& fn_of(const BilinearWeights& w, Side side) {
  return side == Side::V ? w.f : w.g;
}

DirectedReal ratio_of(const Rat& lhs, const DirectedReal& rhs) {
  if (lhs == 0) return DirectedReal();
  return DirectedReal(lhs) / rhs;
}

void check_epsilon(const Rat& epsilon) {
  if (epsilon <= 0 || epsilon > frac(2, 5))
    throw std::invalid_argument("bilinear check: epsilon must lie in (0, 2/5]");
}

}  // namespace

Rat mu_point(const BilinearWeights& w, Side side, uint32_t v, const FactorSieve& sieve) {
  const WeightTable& tab = table_of(w, side);
  const Rat& weight = tab.value(v);
  if (weight == 0) return Rat(0);
  Rat out = fn_of(w, side).value(v, sieve) * weight / static_cast<unsigned long>(v);
  return out;
}

Rat mu_sum(const BilinearWeights& w, Side side, const FactorSieve& sieve) {
  const WeightTable& tab = table_of(w, side);
  Rat sum(0);
  for (uint32_t v : tab.support()) sum += mu_point(w, side, v, sieve);
  return sum;
}

PairClassSet build_class_set(const BilinearWeights& w, const Rat& t, const Rat& K,
                             PairClassKind kind, const FactorSieve& sieve) {
  if (t < 0) throw std::invalid_argument("build_class_set: t must be nonnegative");
  PairClassSet out;
  out.kind = kind;
  out.t = t;
  out.K = K;
  std::vector<uint32_t> vs = w.psi.support();
  std::vector<uint32_t> ws = w.theta.support();
  for (uint32_t v : vs) {
    for (uint32_t ww : ws) {
      PairArithProfile prof = pair_profile(v, ww, sieve);
      Rat D = D_of(prof, w.psi, w.theta);
      if (D > 1) continue;
      bool in;
      if (kind == PairClassKind::EtK) {
        in = L_t(prof, t) >= K;
      } else {
        in = Rat(static_cast<long>(omega_t(prof, t))) >= K;
      }
      if (in) out.pairs.emplace_back(v, ww);
    }
  }
  return out;
}

Rat mu_pair_sum(const BilinearWeights& w, const PairClassSet& pairs, const FactorSieve& sieve) {
  Rat sum(0);
  for (const auto& [v, ww] : pairs.pairs) sum += mu_point(w, Side::V, v, sieve) *
                                                 mu_point(w, Side::W, ww, sieve);
  return sum;
}

BoundReport check_lemma31(const BilinearWeights& w, const Rat& t, const Rat& K,
                          const Rat& epsilon, const FactorSieve& sieve) {
  check_epsilon(epsilon);
  if (t < 1) throw std::invalid_argument("check_lemma31: t must be >= 1");
  BoundReport rep;
  rep.name = "lemma31";
  PairClassSet set = build_class_set(w, t, K, PairClassKind::EtK, sieve);
  rep.lhs = mu_pair_sum(w, set, sieve);
  Rat muv = mu_sum(w, Side::V, sieve);
  Rat muw = mu_sum(w, Side::W, sieve);
  Rat base_exact = muv * muw;
  Rat half_eps = frac(1, 2) + epsilon;
  if (base_exact == 0) {
    rep.rhs_main = DirectedReal();
    rep.ratio = DirectedReal();
  } else {
    Rat neg_kt = -(K * t);
    DirectedReal base = DirectedReal(base_exact) * DirectedReal::exp_of(neg_kt);
    rep.rhs_main = dpow(base, DirectedReal(half_eps));
    rep.ratio = ratio_of(rep.lhs, rep.rhs_main);
  }
  rep.params["t"] = rat_str(t);
  rep.params["K"] = rat_str(K);
  rep.params["epsilon"] = rat_str(epsilon);
  rep.metadata["pair_count"] = std::to_string(set.pairs.size());
  rep.metadata["mu_V"] = rat_str(muv);
  rep.metadata["mu_W"] = rat_str(muw);
  rep.metadata["front_constant"] = "1000^P(eps), nonconstructive; not folded into rhs_main";
  return rep;
}

BoundReport check_lemma32(const BilinearWeights& w, const Rat& t, const Rat& K,
                          const Rat& epsilon, const Rat& C, const FactorSieve& sieve) {
  check_epsilon(epsilon);
  if (t < 1) throw std::invalid_argument("check_lemma32: t must be >= 1");
  if (C <= 0) throw std::invalid_argument("check_lemma32: C must be positive");
  BoundReport rep;
  rep.name = "lemma32";
  PairClassSet set = build_class_set(w, t, K, PairClassKind::FtK, sieve);
  rep.lhs = mu_pair_sum(w, set, sieve);
  Rat muv = mu_sum(w, Side::V, sieve);
  Rat muw = mu_sum(w, Side::W, sieve);
  Rat base_exact = muv * muw;
  Rat half_eps = frac(1, 2) + epsilon;
  if (base_exact == 0) {
    rep.rhs_main = DirectedReal();
    rep.ratio = DirectedReal();
  } else {
    Rat neg_ck = -(C * K);
    DirectedReal base = DirectedReal(base_exact) * DirectedReal::exp_of(neg_ck);
    rep.rhs_main = dpow(base, DirectedReal(half_eps));
    rep.ratio = ratio_of(rep.lhs, rep.rhs_main);
  }
  // (Log t)^((e^{40C} - 1)/2) under both readings of Log.
  DirectedReal p40 = DirectedReal::exp_of(Rat(40) * C);
  DirectedReal expo = (p40 - DirectedReal(1L)) * DirectedReal(frac(1, 2));
  if (t == 1) {
    rep.metadata["log_t_power_plain"] = "0";  // log(1) = 0, positive exponent
  } else {
    DirectedReal plain = dpow(DirectedReal::log_of(t), expo);
    rep.metadata["log_t_power_plain"] = plain.dec_mid();
  }
  DirectedReal logt_cap = dmax(DirectedReal::log_of(t), DirectedReal(1L));
  DirectedReal capped = dpow(logt_cap, expo);
  rep.metadata["log_t_power_capped"] = capped.dec_mid();
  rep.params["t"] = rat_str(t);
  rep.params["K"] = rat_str(K);
  rep.params["epsilon"] = rat_str(epsilon);
  rep.params["C"] = rat_str(C);
  rep.metadata["pair_count"] = std::to_string(set.pairs.size());
  rep.metadata["mu_V"] = rat_str(muv);
  rep.metadata["mu_W"] = rat_str(muw);
  rep.metadata["front_constant"] = "(100 e^C)^P(eps, C), nonconstructive; not folded into rhs_main";
  return rep;
}

}  // namespace dslab
