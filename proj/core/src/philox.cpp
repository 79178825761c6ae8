#include "dslab/philox.hpp"

namespace dslab {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<uint32_t, 4> round_once(const std::array<uint32_t, 4>& x,
                                          const std::array<uint32_t, 2>& k) {
  uint64_t p0 = static_cast<uint64_t>(kMul0) * x[0];
  uint64_t p1 = static_cast<uint64_t>(kMul1) * x[2];
  uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
  uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
  return {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    counter = round_once(counter, key);
  }
  return counter;
}

uint64_t sample_bits53(uint64_t seed, uint64_t sample_index, uint32_t coordinate) {
  std::array<uint32_t, 4> ctr = {static_cast<uint32_t>(sample_index),
                                 static_cast<uint32_t>(sample_index >> 32), coordinate, 0u};
  std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
  std::array<uint32_t, 4> out = philox4x32(ctr, key);
  uint64_t w = (static_cast<uint64_t>(out[1]) << 32) | out[0];
  return w >> 11;
}

Rat dyadic53(uint64_t bits) {
  Int num(static_cast<unsigned long>(bits));
  Int den(1);
  den <<= 53;
  return frac(num, den);
}

}  // namespace dslab
