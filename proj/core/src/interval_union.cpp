#include "dslab/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace dslab {

IntervalUnion IntervalUnion::from_parts(std::vector<Part> parts) {
  for (const Part& p : parts) {
    if (p.first < 0 || p.second > 1 || !(p.first < p.second))
      throw std::invalid_argument("IntervalUnion: part must satisfy 0 <= lo < hi <= 1");
  }
  std::sort(parts.begin(), parts.end());
  IntervalUnion u;
  for (Part& p : parts) {
    if (!u.parts_.empty() && p.first <= u.parts_.back().second) {
      if (p.second > u.parts_.back().second) u.parts_.back().second = std::move(p.second);
    } else {
      u.parts_.push_back(std::move(p));
    }
  }
  return u;
}

Rat IntervalUnion::measure() const {
  Rat m(0);
  for (const Part& p : parts_) m += p.second - p.first;
  return m;
}

bool IntervalUnion::contains_open(const Rat& x) const {
  // Last part with lo < x, then test x < hi.
  size_t lo = 0, hi = parts_.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (parts_[mid].first < x)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == 0) return false;
  return x < parts_[lo - 1].second;
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  IntervalUnion out;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Rat& lo = std::max(pa[i].first, pb[j].first);
    const Rat& hi = std::min(pa[i].second, pb[j].second);
    if (lo < hi) {
      // Gaps of the inputs separate consecutive outputs, so the result is
      // already in normal form.
      out.parts_.emplace_back(lo, hi);
    }
    if (pa[i].second < pb[j].second)
      ++i;
    else if (pb[j].second < pa[i].second)
      ++j;
    else
      ++i, ++j;
  }
  return out;
}

}  // namespace dslab
