#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "unilat/lattice.hpp"

namespace unilat {

/// A subset of a lattice that binary operations are defined on.
class Carrier {
 public:
  Carrier(Lattice lattice, ElementSet members);
  /// The whole lattice.
  explicit Carrier(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementId x) const { return members_.contains(x); }

  /// Least / greatest member in the induced order, when one exists.
  std::optional<ElementId> minimum() const;
  std::optional<ElementId> maximum() const;

  bool closed_under_meet() const;
  bool closed_under_join() const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.members_ == b.members_ && a.lattice_.same_as(b.lattice_);
  }

 private:
  Lattice lattice_;
  ElementSet members_;
};

/// A total binary operation on a carrier, stored as a |C| x |C| table of
/// lattice elements. Every value is a member of the carrier.
class OpTable {
 public:
  using Fn = std::function<ElementId(ElementId, ElementId)>;

  /// Throws CarrierNotClosed when `fn` leaves the carrier.
  OpTable(Carrier carrier, const Fn& fn);
  OpTable(Carrier carrier, std::vector<ElementId> cells);

  const Carrier& carrier() const { return carrier_; }
  const Lattice& lattice() const { return carrier_.lattice(); }
  std::size_t size() const { return carrier_.size(); }

  ElementId operator()(ElementId x, ElementId y) const {
    const auto& m = carrier_.members();
    return cells_[m.position(x) * m.size() + m.position(y)];
  }
  ElementId at_local(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  const std::vector<ElementId>& cells() const { return cells_; }

  /// Restriction to `sub`; throws CarrierNotClosed if values leave it and
  /// CarrierMismatch if `sub` is not inside the carrier.
  OpTable restrict_to(const ElementSet& sub) const;

  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.carrier_ == b.carrier_ && a.cells_ == b.cells_;
  }

 private:
  void check_closed() const;

  Carrier carrier_;
  std::vector<ElementId> cells_;
};

enum class CanonicalKind {
  MeetTnorm,
  JoinTconorm,
  DrasticTnorm,
  DrasticTconorm,
  MeetSubnorm,
  JoinSubconorm,
};

std::string_view to_string(CanonicalKind kind);

/// Builds one of the canonical operators on `carrier`. The t-norm kinds need
/// a greatest member (the neutral element) and the t-conorm kinds a least
/// member; meet/join kinds need closure under the lattice operation.
/// Throws CarrierNotClosed otherwise.
OpTable canonical_op(CanonicalKind kind, const Carrier& carrier);

/// Outcome of one axiom check. A failed check carries the first violating
/// tuple in element-index order.
struct AxiomResult {
  bool holds = true;
  std::vector<ElementId> witness;
  /// Monotonicity only: the violation is in the second argument.
  bool second_argument = false;
};

struct OpClassReport {
  AxiomResult commutative;
  AxiomResult associative;
  AxiomResult monotone;
  /// The neutral element found by scan, or the claimed one if it checks out.
  std::optional<ElementId> neutral;
  /// Set when a neutral element was claimed and it is not neutral; witness
  /// is the element x with op(n,x) != x or op(x,n) != x.
  AxiomResult neutral_claim;
  AxiomResult subnorm_bound;    // op(x,y) <= x meet y
  AxiomResult subconorm_bound;  // op(x,y) >= x join y

  bool semigroup_monotone() const { return commutative.holds && associative.holds && monotone.holds; }
};

OpClassReport classify_op(const OpTable& op, std::optional<ElementId> claimed_neutral = std::nullopt);

enum class OperatorKind { Tnorm, Tconorm, Tsubnorm, Tsubconorm };

std::string_view to_string(OperatorKind kind);

/// Whether `report` (for an operation on `carrier`) describes an operator of
/// the given kind: t-norms have the carrier maximum as neutral, t-conorms the
/// carrier minimum, sub-operators satisfy their bound against the host lattice.
bool is_kind(const OpClassReport& report, const Carrier& carrier, OperatorKind kind);
bool is_kind(const OpTable& op, OperatorKind kind);

enum class BoundaryKind { StrictAboveZero, StrictBelowOne };

struct BoundaryReport {
  bool holds = true;
  std::optional<ElementPair> witness;
};

/// strict_below_one: op(x,y) != 1 for all x,y != 1; strict_above_zero dual.
/// The quantified pairs range over `domain` (default: the carrier), always
/// excluding the lattice bound itself.
BoundaryReport boundary_conditions(const OpTable& op, BoundaryKind kind,
                                   const std::optional<ElementSet>& domain = std::nullopt);

}  // namespace unilat
