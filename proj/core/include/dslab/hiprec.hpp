#pragma once

#include <mpfr.h>

#include <string>

#include "dslab/rational.hpp"

namespace dslab {

/// Interval [lo, hi] in 288-bit mpfr arithmetic with outward rounding.
/// Every operation keeps the true value enclosed, so any comparison that
/// resolves against the interval is a proof; one that straddles is reported
/// as borderline instead of being silently decided.
class DirectedReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 288;

  DirectedReal();  // [0, 0]
  explicit DirectedReal(const Rat& exact);
  explicit DirectedReal(long exact);
  DirectedReal(const DirectedReal& other);
  DirectedReal(DirectedReal&& other) noexcept;
  DirectedReal& operator=(DirectedReal other);
  ~DirectedReal();

  DirectedReal operator+(const DirectedReal& o) const;
  DirectedReal operator-(const DirectedReal& o) const;
  DirectedReal operator*(const DirectedReal& o) const;
  /// Divisor interval must not straddle zero unless this is exactly [0,0].
  DirectedReal operator/(const DirectedReal& o) const;
  DirectedReal& operator+=(const DirectedReal& o);
  DirectedReal negated() const;

  bool is_exact_zero() const;
  bool straddles_zero() const;

  enum class Cmp { Below, Above, Straddle };
  /// Position of the interval relative to the exact point x.
  Cmp compare(const Rat& x) const;
  bool definitely_le(const Rat& x) const;  // hi <= x
  bool definitely_ge(const Rat& x) const;  // lo >= x
  bool definitely_lt(const Rat& x) const;  // hi < x
  bool definitely_gt(const Rat& x) const;  // lo > x

  /// lo of this >= hi of other scaled by exact rational factor.
  bool definitely_ge_scaled(const DirectedReal& other, const Rat& factor) const;
  /// hi of this <= lo of other scaled by exact rational factor.
  bool definitely_le_scaled(const DirectedReal& other, const Rat& factor) const;
  /// Orders by the lower interval end; a deterministic tournament order.
  bool lo_below(const DirectedReal& other) const;

  std::string dec_mid(int digits = 40) const;
  std::string dec_lo(int digits = 40) const;
  std::string dec_hi(int digits = 40) const;
  double mid_double() const;

  friend DirectedReal dmax(const DirectedReal& a, const DirectedReal& b);
  friend DirectedReal dexp(const DirectedReal& x);
  /// Requires x.lo > 0.
  friend DirectedReal dlog(const DirectedReal& x);
  /// base^e = exp(e * log(base)); requires base.lo > 0, or base exactly [0,0]
  /// with a definitely positive exponent (0^e = 0).
  friend DirectedReal dpow(const DirectedReal& base, const DirectedReal& e);

  static DirectedReal exp_of(const Rat& x);
  static DirectedReal log_of(const Rat& x);
  static DirectedReal pow_of(const Rat& base, const Rat& exponent);

 private:
  mpfr_t lo_, hi_;
};

}  // namespace dslab
