#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "unilat/element.hpp"
#include "unilat/error.hpp"

namespace unilat {

/// A finite bounded lattice with materialized order, meet and join tables.
///
/// Immutable after construction. Copies share the underlying tables, so a
/// Lattice can be passed around by value and held by carriers and tables.
class Lattice {
 public:
  using LabelCover = std::pair<std::string, std::string>;
  using IndexCover = std::pair<std::size_t, std::size_t>;

  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers` (x below y). Redundant covers are accepted. Throws Error with
  /// NotAPoset / NotALattice / NoBounds and a witness pair on failure.
  static Lattice build(std::vector<std::string> labels, const std::vector<LabelCover>& covers);
  static Lattice build(std::vector<std::string> labels, const std::vector<IndexCover>& covers);

  /// Non-throwing variant used by generators; nullopt when the closure is
  /// not a bounded lattice.
  static std::optional<Lattice> try_build(std::vector<std::string> labels,
                                          const std::vector<IndexCover>& covers);

  std::size_t size() const { return d_->n; }
  std::vector<ElementId> elements() const;
  ElementSet all() const { return ElementSet::all(size()); }

  const std::string& label(ElementId x) const { return d_->labels[x.index()]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  std::optional<ElementId> find(std::string_view label) const;
  /// Throws UnknownLabel.
  ElementId at(std::string_view label) const;

  bool leq(ElementId x, ElementId y) const { return d_->leq[x.index() * d_->n + y.index()] != 0; }
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(ElementId x, ElementId y) const { return !comparable(x, y); }

  ElementId meet(ElementId x, ElementId y) const { return d_->meet[x.index() * d_->n + y.index()]; }
  ElementId join(ElementId x, ElementId y) const { return d_->join[x.index() * d_->n + y.index()]; }
  std::pair<ElementId, ElementId> meet_join(ElementId x, ElementId y) const {
    return {meet(x, y), join(x, y)};
  }

  ElementId bottom() const { return d_->bottom; }
  ElementId top() const { return d_->top; }

  /// [a,b], ]a,b], [a,b[ or ]a,b[. Throws EmptyBounds unless a <= b.
  ElementSet interval(ElementId a, ElementId b, bool left_open = false,
                      bool right_open = false) const;
  /// {x : x || e}
  ElementSet incomparable_with(ElementId e) const;

  /// Transitive reduction of the order, in (lower, upper) index order.
  const std::vector<ElementPair>& cover_pairs() const { return d_->covers; }

  /// True when both lattices are the same object or have identical labels
  /// and order relation.
  bool same_as(const Lattice& other) const;

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<std::uint8_t> leq;
    std::vector<ElementId> meet;
    std::vector<ElementId> join;
    std::vector<ElementPair> covers;
    ElementId bottom;
    ElementId top;
  };

  explicit Lattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  struct BuildFailure {
    ErrorCode code;
    std::string message;
    std::vector<ElementId> witness;
  };
  static std::variant<Lattice, BuildFailure> build_impl(std::vector<std::string> labels,
                                                        const std::vector<IndexCover>& covers);

  std::shared_ptr<const Data> d_;
};

/// The incomparability set and the four distinguished pair regions around a
/// neutral-element candidate e.
struct RegionSets {
  ElementId e;
  ElementSet I_e;
  PairSet D_e;
  PairSet D_e_prime;
  PairSet E_e;
  PairSet E_e_prime;
};

RegionSets regions(const Lattice& lattice, ElementId e);

}  // namespace unilat
