#include "dslab/variance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dslab/approx_sets.hpp"
#include "dslab/counting.hpp"
#include "dslab/parallel.hpp"

namespace dslab {

namespace {

void check_sweep_args(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve, unsigned k,
                      uint32_t budget) {
  if (Q == 0) throw std::invalid_argument("pair sweep: Q must be >= 1");
  if (k == 0) throw std::invalid_argument("pair sweep: k must be >= 1");
  if (Q > budget)
    throw std::invalid_argument("pair sweep: Q = " + std::to_string(Q) +
                                " exceeds the pair-sweep budget of " + std::to_string(budget));
  if (Q > psi.Q()) throw std::invalid_argument("pair sweep: Q exceeds psi support bound");
  if (Q > sieve.limit()) throw std::invalid_argument("pair sweep: Q exceeds sieve limit");
}

}  // namespace

std::vector<VarianceReport> exact_variance_ladder(uint32_t Q, const PsiTable& psi,
                                                  const FactorSieve& sieve, unsigned k,
                                                  std::span<const uint32_t> checkpoints,
                                                  unsigned threads, uint32_t budget) {
  check_sweep_args(Q, psi, sieve, k, budget);
  if (checkpoints.empty()) throw std::invalid_argument("variance ladder: no checkpoints");
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0 || checkpoints[i] > Q)
      throw std::invalid_argument("variance ladder: checkpoint outside [1, Q]");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("variance ladder: checkpoints must ascend");
  }

  // Row m collects the diagonal term plus both ordered copies of every pair
  // (q, m) with q < m, so prefix sums over rows give the full ordered-pair
  // overlap sum at every checkpoint.
  std::vector<Rat> diag(Q + 1, Rat(0));
  std::vector<uint32_t> support;
  for (uint32_t q = 1; q <= Q; ++q) {
    if (psi.value(q) == 0) continue;
    support.push_back(q);
    diag[q] = closed_form_mass(q, psi, sieve, k);
  }

  struct RowBlock {
    uint32_t first_m = 0;
    std::vector<Rat> rows;
  };
  size_t n_support = support.size();
  std::vector<RowBlock> blocks = run_chunked<RowBlock>(
      0, n_support, threads, kDefaultChunks, [&](uint64_t, uint64_t b, uint64_t e) {
        RowBlock blk;
        blk.first_m = static_cast<uint32_t>(b);
        blk.rows.reserve(e - b);
        for (uint64_t mi = b; mi < e; ++mi) {
          uint32_t m = support[mi];
          Rat row = diag[m];
          const Rat& psi_m = psi.value(m);
          for (uint64_t qi = 0; qi < mi; ++qi) {
            uint32_t q = support[qi];
            // D(q, m) < 1/2 forces an empty intersection; test cheaply first.
            Rat a = Rat(static_cast<unsigned long>(m)) * psi.value(q);
            Rat bqt = Rat(static_cast<unsigned long>(q)) * psi_m;
            Rat twice = 2 * std::max(a, bqt);
            if (twice < std::gcd(q, m)) continue;
            Rat ov = pair_overlap_1d(q, m, psi, sieve);
            if (ov == 0) continue;
            row += 2 * pow_rat(ov, k);
          }
          blk.rows.push_back(std::move(row));
        }
        return blk;
      });

  std::vector<VarianceReport> out;
  out.reserve(checkpoints.size());
  Rat overlap_prefix(0);
  Rat mass_prefix(0);
  size_t next_checkpoint = 0;
  size_t support_idx = 0;
  auto flush_checkpoints_upto = [&](uint32_t m_done) {
    while (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] <= m_done) {
      VarianceReport rep;
      rep.Q = checkpoints[next_checkpoint];
      rep.k = k;
      rep.psi_mass = mass_prefix;
      rep.overlap_sum = overlap_prefix;
      rep.variance = rep.overlap_sum - rep.psi_mass * rep.psi_mass;
      rep.excess = rep.variance - rep.psi_mass;
      out.push_back(std::move(rep));
      ++next_checkpoint;
    }
  };

  for (const RowBlock& blk : blocks) {
    for (const Rat& row : blk.rows) {
      uint32_t m = support[support_idx];
      // Emit any checkpoints strictly below the next support element first.
      flush_checkpoints_upto(m - 1);
      overlap_prefix += row;
      mass_prefix += diag[m];
      ++support_idx;
      flush_checkpoints_upto(m);
    }
  }
  flush_checkpoints_upto(Q);
  return out;
}

VarianceReport exact_variance(uint32_t Q, const PsiTable& psi, const FactorSieve& sieve,
                              unsigned k, unsigned threads, uint32_t budget) {
  uint32_t cp[1] = {Q};
  return exact_variance_ladder(Q, psi, sieve, k, cp, threads, budget)[0];
}

}  // namespace dslab
