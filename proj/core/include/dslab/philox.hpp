#pragma once

#include <array>
#include <cstdint>

#include "dslab/rational.hpp"

namespace dslab {

/// Philox-4x32-10 counter-based generator. Stateless: every block is a pure
/// function of (counter, key), which makes sampling reproducible and
/// embarrassingly parallel.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// 53 uniform bits for one coordinate of one sample, keyed by
/// (seed, sample_index, coordinate).
uint64_t sample_bits53(uint64_t seed, uint64_t sample_index, uint32_t coordinate);

/// bits / 2^53 as an exact rational in [0, 1).
Rat dyadic53(uint64_t bits);

}  // namespace dslab
