#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dslab/factor_sieve.hpp"
#include "dslab/rational.hpp"

namespace dslab {

/// Finitely supported nonnegative rational weights on 1..support_bound.
/// Queries outside the support bound return zero.
class WeightTable {
 public:
  explicit WeightTable(uint32_t support_bound);

  uint32_t support_bound() const { return bound_; }
  const Rat& value(uint32_t q) const;
  void set(uint32_t q, Rat v);

  /// Ascending q with value(q) != 0.
  std::vector<uint32_t> support() const;

  bool operator==(const WeightTable&) const = default;

 private:
  uint32_t bound_;
  std::vector<Rat> vals_;  // index 1..bound_
};

/// Thrown by the text reader with a message naming the offending line.
class PsiParseError : public std::invalid_argument {
 public:
  PsiParseError(size_t line, const std::string& what);
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// An approximation function: q maps to an exact rational in [0, 1/2],
/// zero beyond the support bound Q.
class PsiTable {
 public:
  explicit PsiTable(uint32_t Q);

  uint32_t Q() const { return w_.support_bound(); }
  const Rat& value(uint32_t q) const { return w_.value(q); }
  /// Enforces 0 <= v <= 1/2.
  void set(uint32_t q, Rat v);

  const WeightTable& weights() const { return w_; }
  std::vector<uint32_t> support() const { return w_.support(); }

  bool operator==(const PsiTable&) const = default;

  // Shipped presets.
  static PsiTable constant(uint32_t Q, const Rat& c);
  /// min(1/2, q^{-1/exponent}) rounded to the nearest 53-bit dyadic.
  static PsiTable power_law(uint32_t Q, const Rat& exponent);
  static PsiTable primes_only(uint32_t Q, const Rat& c, const FactorSieve& sieve);
  /// Supported on multiples of a highly composite modulus (default 60).
  static PsiTable cluster(uint32_t Q, const Rat& c, uint32_t modulus = 60);

  // Text format: header "Q=<int>", then one line "q p/q" per supported value.
  // Omitted lines mean zero.
  static PsiTable read(std::istream& in);
  static PsiTable load_file(const std::string& path);
  void write(std::ostream& out) const;

 private:
  WeightTable w_;
};

}  // namespace dslab
