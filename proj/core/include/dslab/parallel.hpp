#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace dslab {

/// 0 means "use the hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(chunk_index, begin, end) over a fixed grid of chunks and returns
/// results in chunk order. The grid depends only on (begin, end, n_chunks),
/// never on the worker count, so any later order-sensitive fold over the
/// returned vector is identical for every thread count.
template <class R, class Fn>
std::vector<R> run_chunked(uint64_t begin, uint64_t end, unsigned threads, uint64_t n_chunks,
                           Fn&& fn) {
  if (end < begin) end = begin;
  uint64_t total = end - begin;
  if (n_chunks == 0) n_chunks = 1;
  if (n_chunks > total && total > 0) n_chunks = total;
  if (total == 0) return {};
  std::vector<R> results(n_chunks);
  auto bounds = [&](uint64_t c) {
    uint64_t b = begin + total * c / n_chunks;
    uint64_t e = begin + total * (c + 1) / n_chunks;
    return std::pair<uint64_t, uint64_t>(b, e);
  };
  unsigned workers = resolve_threads(threads);
  if (workers <= 1 || n_chunks == 1) {
    for (uint64_t c = 0; c < n_chunks; ++c) {
      auto [b, e] = bounds(c);
      results[c] = fn(c, b, e);
    }
    return results;
  }
  std::atomic<uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      uint64_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      auto [b, e] = bounds(c);
      results[c] = fn(c, b, e);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

inline constexpr uint64_t kDefaultChunks = 128;

}  // namespace dslab
