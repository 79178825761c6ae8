#include "dslab/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "dslab/approx_sets.hpp"
#include "dslab/counting.hpp"
#include "dslab/pair_stats.hpp"
#include "dslab/parallel.hpp"

namespace dslab {

namespace {

struct ThresholdDecision {
  bool holds = false;
  bool borderline = false;
};

// omega <= (eps / 4k) * log(2D)  <=>  exp(4k * omega / eps) <= 2D.
// Resolved with outward rounding; a straddle is decided towards E1 (the
// "<=" side) and flagged.
ThresholdDecision omega_le_threshold(unsigned omega, unsigned k, const Rat& eps, const Rat& D) {
  Rat arg = Rat(4L * k * (long)omega) / eps;
  DirectedReal lhs = DirectedReal::exp_of(arg);
  Rat twoD = 2 * D;
  ThresholdDecision out;
  switch (lhs.compare(twoD)) {
    case DirectedReal::Cmp::Below:
      out.holds = true;
      break;
    case DirectedReal::Cmp::Above:
      out.holds = false;
      break;
    case DirectedReal::Cmp::Straddle:
      // exp equals a rational only at argument 0, which compares exactly.
      if (lhs.definitely_le(twoD)) {
        out.holds = true;
      } else {
        out.holds = true;
        out.borderline = true;
      }
      break;
  }
  return out;
}

// omega > (eps / 8k) * log(4^i)  <=>  exp(8k * omega / eps) > 4^i.
ThresholdDecision omega_gt_bucket_threshold(unsigned omega, unsigned k, const Rat& eps, int i) {
  Rat arg = Rat(8L * k * (long)omega) / eps;
  DirectedReal lhs = DirectedReal::exp_of(arg);
  Int p4(1);
  p4 <<= static_cast<unsigned>(2 * i);
  Rat pow4(p4);
  ThresholdDecision out;
  if (lhs.definitely_gt(pow4)) {
    out.holds = true;
  } else if (lhs.definitely_le(pow4)) {
    out.holds = false;
  } else {
    out.holds = false;
    out.borderline = true;
  }
  return out;
}

// For D >= 1/2, the i with 2^(i-1) <= D < 2^i.
int dyadic_index_of(const Rat& D) {
  int i = 0;
  Rat hi(1);
  while (D >= hi) {
    hi *= 2;
    ++i;
  }
  return i;
}

// 4^j as an exact rational, j >= -1.
Rat pow4_rat(int j) {
  if (j < 0) return frac(1, 4);
  Int p(1);
  p <<= static_cast<unsigned>(2 * j);
  return Rat(p);
}

}  // namespace

size_t PartitionReport::pair_index(uint32_t q, uint32_t r, uint32_t Q) {
  if (!(q < r) || r > Q) throw std::invalid_argument("pair_index: need q < r <= Q");
  // Pairs ordered by r then q: index = (r-1)(r-2)/2 + (q-1).
  return static_cast<size_t>(r - 1) * (r - 2) / 2 + (q - 1);
}

PairClass PartitionReport::at(uint32_t q, uint32_t r) const {
  return class_of[pair_index(q, r, Q)];
}

PartitionReport classify_pairs(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                               unsigned k, const Rat& epsilon, unsigned threads,
                               uint32_t budget) {
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("classify_pairs: epsilon must lie in (0, 1)");
  if (Q == 0 || k == 0) throw std::invalid_argument("classify_pairs: Q and k must be >= 1");
  if (Q > budget) throw std::invalid_argument("classify_pairs: Q exceeds the pair-sweep budget");
  if (Q > psi.Q() || Q > sieve.limit())
    throw std::invalid_argument("classify_pairs: Q outside table range");

  PartitionReport rep;
  rep.Q = Q;
  rep.k = k;
  rep.epsilon = epsilon;
  rep.psi_mass = psi_mass(Q, psi, sieve, k);
  for (auto& m : rep.lambda_mass_by_class) m = Rat(0);
  for (auto& m : rep.overlap_mass_by_class) m = Rat(0);
  size_t n_pairs = Q >= 2 ? static_cast<size_t>(Q) * (Q - 1) / 2 : 0;
  rep.class_of.assign(n_pairs, PairClass::Disjoint);

  // I = min{ i >= 0 : 2^i >= psi_mass }.
  {
    int i = 0;
    Rat p(1);
    while (p < rep.psi_mass) {
      p *= 2;
      ++i;
    }
    rep.I = i;
  }
  rep.dyadic_R.resize(rep.I + 1);

  std::vector<Rat> lam(Q + 1, Rat(0));  // lambda_k(A_q^k)
  for (uint32_t q = 1; q <= Q; ++q)
    if (psi.value(q) != 0) lam[q] = closed_form_mass(q, psi, sieve, k);

  Rat exponent = epsilon / 2 - 1;  // D^(-1 + eps/2)

  struct Partial {
    std::array<uint64_t, 4> count{};
    std::array<Rat, 4> lambda_mass;
    std::array<Rat, 4> overlap_mass;
    std::vector<DyadicCell> dyadic_R;
    DyadicCell tail;
    std::map<std::pair<int, int>, DyadicCell> e2;
    std::map<int, DyadicCell> e3;
    uint64_t borderline = 0;
  };

  std::vector<Partial> partials = run_chunked<Partial>(
      2, static_cast<uint64_t>(Q) + 1, threads, kDefaultChunks,
      [&](uint64_t, uint64_t rb, uint64_t re) {
        Partial part;
        part.dyadic_R.resize(rep.I + 1);
        std::map<Rat, DirectedReal> pow_cache;  // D -> D^(-1+eps/2)
        for (uint32_t r = static_cast<uint32_t>(rb); r < re; ++r) {
          for (uint32_t q = 1; q < r; ++q) {
            size_t idx = PartitionReport::pair_index(q, r, Q);
            if (psi.value(q) == 0 || psi.value(r) == 0) {
              rep.class_of[idx] = PairClass::Disjoint;
              ++part.count[0];
              continue;
            }
            PairArithProfile prof = pair_profile(q, r, sieve);
            Rat D = D_of(prof, psi);
            Rat lam_prod = lam[q] * lam[r];
            if (D < frac(1, 2)) {
              rep.class_of[idx] = PairClass::Disjoint;
              ++part.count[0];
              part.lambda_mass[0] += lam_prod;
              continue;
            }
            Rat D2 = D * D;
            Rat L = L_t(prof, D2);
            Rat invD = Rat(1) / D;
            PairClass cls;
            if (L > invD) {
              cls = PairClass::E2;
            } else {
              unsigned omega = omega_t(prof, D2);
              ThresholdDecision dec = omega_le_threshold(omega, k, epsilon, D);
              if (dec.borderline) ++part.borderline;
              cls = dec.holds ? PairClass::E1 : PairClass::E3;
            }
            rep.class_of[idx] = cls;
            size_t ci = static_cast<size_t>(cls);
            ++part.count[ci];
            part.lambda_mass[ci] += lam_prod;
            Rat ov = pow_rat(pair_overlap_1d(q, r, psi, sieve), k);
            part.overlap_mass[ci] += ov;

            int di = dyadic_index_of(D);
            if (cls == PairClass::E1) {
              DyadicCell* cell;
              if (di <= rep.I) {
                cell = &part.dyadic_R[di];
              } else {
                cell = &part.tail;
              }
              ++cell->count;
              cell->lambda_mass += lam_prod;
              auto it = pow_cache.find(D);
              if (it == pow_cache.end())
                it = pow_cache.emplace(D, DirectedReal::pow_of(D, exponent)).first;
              DirectedReal term = DirectedReal(lam_prod) * it->second;
              cell->weighted += term;
            } else if (cls == PairClass::E2) {
              // j = min { j >= i : L_{4^(j-1)}(q, r) <= 1 }.
              int j = di;
              while (L_t(prof, pow4_rat(j - 1)) > 1) ++j;
              DyadicCell& cell = part.e2[{di, j}];
              ++cell.count;
              cell.lambda_mass += lam_prod;
            } else if (cls == PairClass::E3) {
              ThresholdDecision dec =
                  omega_gt_bucket_threshold(omega_t(prof, pow4_rat(di)), k, epsilon, di);
              if (dec.borderline) ++part.borderline;
              if (dec.holds) {
                DyadicCell& cell = part.e3[di];
                ++cell.count;
                cell.lambda_mass += lam_prod;
              } else {
                // Membership in bucket di is implied for every E3 pair; a miss
                // means the directed comparison could not resolve.
                ++part.borderline;
              }
            }
          }
        }
        return part;
      });

  for (Partial& p : partials) {
    for (int c = 0; c < 4; ++c) {
      rep.count_by_class[c] += p.count[c];
      rep.lambda_mass_by_class[c] += p.lambda_mass[c];
      rep.overlap_mass_by_class[c] += p.overlap_mass[c];
    }
    for (int i = 0; i <= rep.I; ++i) {
      rep.dyadic_R[i].count += p.dyadic_R[i].count;
      rep.dyadic_R[i].lambda_mass += p.dyadic_R[i].lambda_mass;
      rep.dyadic_R[i].weighted += p.dyadic_R[i].weighted;
    }
    rep.tail_R_prime.count += p.tail.count;
    rep.tail_R_prime.lambda_mass += p.tail.lambda_mass;
    rep.tail_R_prime.weighted += p.tail.weighted;
    for (auto& [key, cell] : p.e2) {
      DyadicCell& dst = rep.e2_buckets[key];
      dst.count += cell.count;
      dst.lambda_mass += cell.lambda_mass;
    }
    for (auto& [key, cell] : p.e3) {
      DyadicCell& dst = rep.e3_buckets[key];
      dst.count += cell.count;
      dst.lambda_mass += cell.lambda_mass;
    }
    rep.borderline_count += p.borderline;
  }
  return rep;
}

PartitionAudit partition_audit(const PartitionReport& partition, const VarianceReport& variance) {
  if (partition.Q != variance.Q || partition.k != variance.k)
    throw std::invalid_argument("partition_audit: reports describe different runs");
  PartitionAudit audit;
  audit.diagonal_mass = variance.psi_mass;
  Rat off(0);
  for (int c = 0; c < 4; ++c) {
    audit.overlap_mass_by_class[c] = partition.overlap_mass_by_class[c];
    off += partition.overlap_mass_by_class[c];
  }
  audit.off_diagonal_overlap = 2 * off;
  audit.overlap_sum_expected = variance.overlap_sum;
  Rat together = audit.diagonal_mass + audit.off_diagonal_overlap;
  audit.reconciled = (together == variance.overlap_sum);
  audit.borderline_count = partition.borderline_count;
  if (partition.psi_mass > 0) {
    DirectedReal denom = dpow(DirectedReal(partition.psi_mass), DirectedReal(Rat(1) + partition.epsilon));
    for (int c = 0; c < 4; ++c) {
      if (partition.overlap_mass_by_class[c] == 0) {
        audit.ratio_vs_psi_power[c] = DirectedReal();
      } else {
        audit.ratio_vs_psi_power[c] = DirectedReal(partition.overlap_mass_by_class[c]) / denom;
      }
    }
  }
  return audit;
}

}  // namespace dslab
