#include "unilat/op_table.hpp"

#include <string>

namespace unilat {

Carrier::Carrier(Lattice lattice, ElementSet members) : lattice_(std::move(lattice)), members_(std::move(members)) {
  if (members_.universe() != lattice_.size()) {
    throw Error(ErrorCode::CarrierMismatch, "carrier universe does not match the lattice size");
  }
}

Carrier::Carrier(Lattice lattice) : lattice_(std::move(lattice)), members_(lattice_.all()) {}

std::optional<ElementId> Carrier::minimum() const {
  for (ElementId m : members_) {
    bool least = true;
    for (ElementId x : members_) least = least && lattice_.leq(m, x);
    if (least) return m;
  }
  return std::nullopt;
}

std::optional<ElementId> Carrier::maximum() const {
  for (ElementId m : members_) {
    bool greatest = true;
    for (ElementId x : members_) greatest = greatest && lattice_.leq(x, m);
    if (greatest) return m;
  }
  return std::nullopt;
}

bool Carrier::closed_under_meet() const {
  for (ElementId x : members_) {
    for (ElementId y : members_) {
      if (!members_.contains(lattice_.meet(x, y))) return false;
    }
  }
  return true;
}

bool Carrier::closed_under_join() const {
  for (ElementId x : members_) {
    for (ElementId y : members_) {
      if (!members_.contains(lattice_.join(x, y))) return false;
    }
  }
  return true;
}

OpTable::OpTable(Carrier carrier, const Fn& fn) : carrier_(std::move(carrier)) {
  const auto& m = carrier_.members();
  cells_.reserve(m.size() * m.size());
  for (ElementId x : m) {
    for (ElementId y : m) cells_.push_back(fn(x, y));
  }
  check_closed();
}

OpTable::OpTable(Carrier carrier, std::vector<ElementId> cells)
    : carrier_(std::move(carrier)), cells_(std::move(cells)) {
  if (cells_.size() != carrier_.size() * carrier_.size()) {
    throw Error(ErrorCode::ShapeError, "table has " + std::to_string(cells_.size()) + " cells for a carrier of " +
                                           std::to_string(carrier_.size()) + " elements");
  }
  check_closed();
}

void OpTable::check_closed() const {
  const auto& m = carrier_.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      ElementId v = cells_[i * m.size() + j];
      if (v.index() >= lattice().size() || !m.contains(v)) {
        throw Error(ErrorCode::CarrierNotClosed,
                    "value at (" + lattice().label(m[i]) + "," + lattice().label(m[j]) + ") leaves the carrier",
                    {m[i], m[j]});
      }
    }
  }
}

OpTable OpTable::restrict_to(const ElementSet& sub) const {
  for (ElementId x : sub) {
    if (!carrier_.contains(x)) {
      throw Error(ErrorCode::CarrierMismatch, "restriction target " + lattice().label(x) + " is outside the carrier");
    }
  }
  return OpTable(Carrier(lattice(), sub), [this](ElementId x, ElementId y) { return (*this)(x, y); });
}

std::string_view to_string(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::MeetTnorm: return "meet_tnorm";
    case CanonicalKind::JoinTconorm: return "join_tconorm";
    case CanonicalKind::DrasticTnorm: return "drastic_tnorm";
    case CanonicalKind::DrasticTconorm: return "drastic_tconorm";
    case CanonicalKind::MeetSubnorm: return "meet_subnorm";
    case CanonicalKind::JoinSubconorm: return "join_subconorm";
  }
  return "?";
}

OpTable canonical_op(CanonicalKind kind, const Carrier& carrier) {
  const Lattice& L = carrier.lattice();
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::CarrierNotClosed, std::string(to_string(kind)) + ": carrier " + what);
  };
  switch (kind) {
    case CanonicalKind::MeetTnorm:
      require(carrier.maximum().has_value(), "has no greatest element");
      [[fallthrough]];
    case CanonicalKind::MeetSubnorm:
      require(carrier.closed_under_meet(), "is not closed under meet");
      return OpTable(carrier, [&](ElementId x, ElementId y) { return L.meet(x, y); });
    case CanonicalKind::JoinTconorm:
      require(carrier.minimum().has_value(), "has no least element");
      [[fallthrough]];
    case CanonicalKind::JoinSubconorm:
      require(carrier.closed_under_join(), "is not closed under join");
      return OpTable(carrier, [&](ElementId x, ElementId y) { return L.join(x, y); });
    case CanonicalKind::DrasticTnorm: {
      auto hi = carrier.maximum();
      auto lo = carrier.minimum();
      require(hi && lo, "is not bounded");
      return OpTable(carrier, [&](ElementId x, ElementId y) {
        if (x == *hi) return y;
        if (y == *hi) return x;
        return *lo;
      });
    }
    case CanonicalKind::DrasticTconorm: {
      auto hi = carrier.maximum();
      auto lo = carrier.minimum();
      require(hi && lo, "is not bounded");
      return OpTable(carrier, [&](ElementId x, ElementId y) {
        if (x == *lo) return y;
        if (y == *lo) return x;
        return *hi;
      });
    }
  }
  throw Error(ErrorCode::CarrierNotClosed, "unknown canonical kind");
}

OpClassReport classify_op(const OpTable& op, std::optional<ElementId> claimed_neutral) {
  const Lattice& L = op.lattice();
  const auto& m = op.carrier().members();
  const std::size_t k = m.size();
  OpClassReport r;

  for (std::size_t i = 0; i < k && r.commutative.holds; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (op.at_local(i, j) != op.at_local(j, i)) {
        r.commutative = {false, {m[i], m[j]}};
        break;
      }
    }
  }

  for (std::size_t i = 0; i < k && r.associative.holds; ++i) {
    for (std::size_t j = 0; j < k && r.associative.holds; ++j) {
      const std::size_t ij = m.position(op.at_local(i, j));
      for (std::size_t l = 0; l < k; ++l) {
        if (op.at_local(i, m.position(op.at_local(j, l))) != op.at_local(ij, l)) {
          r.associative = {false, {m[i], m[j], m[l]}};
          break;
        }
      }
    }
  }

  // Pairwise definition: x <= y implies op(x,z) <= op(y,z) and op(z,x) <= op(z,y).
  for (int arg = 0; arg < 2 && r.monotone.holds; ++arg) {
    for (std::size_t i = 0; i < k && r.monotone.holds; ++i) {
      for (std::size_t j = 0; j < k && r.monotone.holds; ++j) {
        if (i == j || !L.leq(m[i], m[j])) continue;
        for (std::size_t l = 0; l < k; ++l) {
          ElementId lo = arg == 0 ? op.at_local(i, l) : op.at_local(l, i);
          ElementId hi = arg == 0 ? op.at_local(j, l) : op.at_local(l, j);
          if (!L.leq(lo, hi)) {
            r.monotone = {false, {m[i], m[j], m[l]}, arg == 1};
            break;
          }
        }
      }
    }
  }

  auto neutral_violation = [&](std::size_t n) -> std::optional<ElementId> {
    for (std::size_t x = 0; x < k; ++x) {
      if (op.at_local(n, x) != m[x] || op.at_local(x, n) != m[x]) return m[x];
    }
    return std::nullopt;
  };
  if (claimed_neutral) {
    if (!m.contains(*claimed_neutral)) {
      r.neutral_claim = {false, {*claimed_neutral}};
    } else if (auto bad = neutral_violation(m.position(*claimed_neutral))) {
      r.neutral_claim = {false, {*bad}};
    } else {
      r.neutral = claimed_neutral;
    }
  }
  if (!r.neutral) {
    for (std::size_t n = 0; n < k; ++n) {
      if (!neutral_violation(n)) {
        r.neutral = m[n];
        break;
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      ElementId v = op.at_local(i, j);
      if (r.subnorm_bound.holds && !L.leq(v, L.meet(m[i], m[j]))) r.subnorm_bound = {false, {m[i], m[j]}};
      if (r.subconorm_bound.holds && !L.leq(L.join(m[i], m[j]), v)) r.subconorm_bound = {false, {m[i], m[j]}};
    }
  }
  return r;
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Tnorm: return "t-norm";
    case OperatorKind::Tconorm: return "t-conorm";
    case OperatorKind::Tsubnorm: return "t-subnorm";
    case OperatorKind::Tsubconorm: return "t-subconorm";
  }
  return "?";
}

bool is_kind(const OpClassReport& r, const Carrier& carrier, OperatorKind kind) {
  if (!r.semigroup_monotone()) return false;
  switch (kind) {
    case OperatorKind::Tnorm: return r.neutral.has_value() && r.neutral == carrier.maximum();
    case OperatorKind::Tconorm: return r.neutral.has_value() && r.neutral == carrier.minimum();
    case OperatorKind::Tsubnorm: return r.subnorm_bound.holds;
    case OperatorKind::Tsubconorm: return r.subconorm_bound.holds;
  }
  return false;
}

bool is_kind(const OpTable& op, OperatorKind kind) {
  std::optional<ElementId> claim;
  if (kind == OperatorKind::Tnorm) claim = op.carrier().maximum();
  if (kind == OperatorKind::Tconorm) claim = op.carrier().minimum();
  return is_kind(classify_op(op, claim), op.carrier(), kind);
}

BoundaryReport boundary_conditions(const OpTable& op, BoundaryKind kind, const std::optional<ElementSet>& domain) {
  const Lattice& L = op.lattice();
  const ElementId bound = kind == BoundaryKind::StrictBelowOne ? L.top() : L.bottom();
  const ElementSet& dom = domain ? *domain : op.carrier().members();
  BoundaryReport r;
  for (ElementId x : dom) {
    if (x == bound || !op.carrier().contains(x)) continue;
    for (ElementId y : dom) {
      if (y == bound || !op.carrier().contains(y)) continue;
      if (op(x, y) == bound) {
        r.holds = false;
        r.witness = ElementPair{x, y};
        return r;
      }
    }
  }
  return r;
}

}  // namespace unilat
