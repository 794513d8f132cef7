#include "unilat/element.hpp"

#include <algorithm>

namespace unilat {

void ElementSet::insert(ElementId x) {
  if (contains(x)) return;
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  members_.insert(it, x);
  reindex();
}

void ElementSet::reindex() {
  std::fill(pos_.begin(), pos_.end(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    pos_[members_[i].index()] = static_cast<std::int32_t>(i);
  }
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  return where(universe(), [&](ElementId x) { return contains(x) || other.contains(x); });
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  return where(universe(), [&](ElementId x) { return contains(x) && other.contains(x); });
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  return where(universe(), [&](ElementId x) { return contains(x) && !other.contains(x); });
}

PairSet PairSet::rect(const ElementSet& xs, const ElementSet& ys) {
  PairSet p(xs.universe());
  for (ElementId x : xs) {
    for (ElementId y : ys) p.insert(x, y);
  }
  return p;
}

std::size_t PairSet::size() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

std::vector<ElementPair> PairSet::pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (mask_[i * n_ + j]) out.push_back({ElementId(i), ElementId(j)});
    }
  }
  return out;
}

PairSet PairSet::operator|(const PairSet& other) const {
  PairSet out(*this);
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] |= other.mask_[i];
  return out;
}

PairSet symmetric_rect(const ElementSet& xs, const ElementSet& ys) {
  return PairSet::rect(xs, ys) | PairSet::rect(ys, xs);
}

}  // namespace unilat
