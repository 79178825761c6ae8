#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dslab {

/// Exact rational; the workhorse type of every measure and pair statistic.
using Rat = mpq_class;
/// Exact integer.
using Int = mpz_class;

/// n/d in canonical form. d must be nonzero.
Rat frac(long n, unsigned long d);
Rat frac(const Int& n, const Int& d);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

/// x^k for k >= 0 (x^0 = 1).
Rat pow_rat(const Rat& x, unsigned k);

/// Renders "p/q", denominator always present ("3/2", "-1/4", "5/1").
std::string rat_str(const Rat& x);

/// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// Decimal rendering (round-to-nearest at `digits` significant digits).
std::string rat_decimal(const Rat& x, int digits = 20);

Int int_from_i128(__int128 v);
/// num/den in canonical form; den must be nonzero.
Rat rat_from_i128(__int128 num, __int128 den);

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);

}  // namespace dslab
