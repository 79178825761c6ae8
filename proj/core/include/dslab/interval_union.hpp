#pragma once

#include <utility>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

/// Finite union of open subintervals of [0,1] with exact rational endpoints,
/// kept in normal form: sorted, pairwise disjoint, non-adjacent (a shared
/// endpoint is a null set, so touching parts are merged).
class IntervalUnion {
 public:
  using Part = std::pair<Rat, Rat>;  // (lo, hi), open

  IntervalUnion() = default;

  /// Normalizes arbitrary parts. Each must satisfy 0 <= lo < hi <= 1.
  static IntervalUnion from_parts(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// Exact total length.
  Rat measure() const;

  /// Strict interior membership; endpoints are outside.
  bool contains_open(const Rat& x) const;

  bool operator==(const IntervalUnion&) const = default;

  /// Exact intersection by a linear two-pointer merge.
  friend IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

 private:
  std::vector<Part> parts_;
};

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

}  // namespace dslab
