#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace unilat {

/// Index of an element inside one FiniteBoundedLattice.
struct ElementId {
  std::uint16_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t i) : value(static_cast<std::uint16_t>(i)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

struct ElementPair {
  ElementId x;
  ElementId y;
  friend constexpr auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

/// Subset of a lattice's elements, kept in index order with O(1) membership
/// and O(1) position lookup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : pos_(universe, -1) {}

  template <class Pred>
  static ElementSet where(std::size_t universe, Pred&& pred) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      if (pred(ElementId(i))) s.insert(ElementId(i));
    }
    return s;
  }

  static ElementSet all(std::size_t universe) {
    return where(universe, [](ElementId) { return true; });
  }

  void insert(ElementId x);

  bool contains(ElementId x) const {
    return x.index() < pos_.size() && pos_[x.index()] >= 0;
  }
  /// Local position of x; x must be a member.
  std::size_t position(ElementId x) const { return static_cast<std::size_t>(pos_[x.index()]); }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t universe() const { return pos_.size(); }
  std::span<const ElementId> members() const { return members_; }
  ElementId operator[](std::size_t i) const { return members_[i]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_ && a.pos_.size() == b.pos_.size();
  }

 private:
  void reindex();

  std::vector<ElementId> members_;
  std::vector<std::int32_t> pos_;
};

/// Set of ordered pairs over a universe of n elements (an n x n mask).
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::size_t universe) : n_(universe), mask_(universe * universe, 0) {}

  static PairSet rect(const ElementSet& xs, const ElementSet& ys);

  void insert(ElementId x, ElementId y) { mask_[x.index() * n_ + y.index()] = 1; }
  bool contains(ElementId x, ElementId y) const { return mask_[x.index() * n_ + y.index()] != 0; }
  std::size_t universe() const { return n_; }
  std::size_t size() const;
  std::vector<ElementPair> pairs() const;

  PairSet operator|(const PairSet& other) const;
  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> mask_;
};

/// X x Y union Y x X.
PairSet symmetric_rect(const ElementSet& xs, const ElementSet& ys);

}  // namespace unilat
