#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unilat/constructions.hpp"

namespace unilat {

struct VerificationReport {
  AxiomResult commutative;
  /// Witness (x,y,z) with U(x,U(y,z)) != U(U(x,y),z).
  AxiomResult associative;
  /// Witness (x,y,z) with x <= y and U(x,z) not <= U(y,z) (or the mirrored
  /// inequality when second_argument is set).
  AxiomResult monotone;
  /// Witness x with U(e,x) != x or U(x,e) != x; e itself if e is outside the carrier.
  AxiomResult neutral;
  bool is_uninorm = false;
};

/// Full uninorm check of `op` on its carrier with neutral element e.
/// Associativity runs over all triples; monotonicity over cover pairs of the
/// carrier's induced order.
VerificationReport check_uninorm(const OpTable& op, ElementId e);

struct AssociativityWitness {
  ElementId x, y, z;
  ElementId left;   // U(x, U(y,z))
  ElementId right;  // U(U(x,y), z)
};

/// First violating triple in index order, if any.
std::optional<AssociativityWitness> check_associative(const OpTable& op);
/// Re-evaluates one triple.
AssociativityWitness evaluate_triple(const OpTable& op, ElementId x, ElementId y, ElementId z);

/// Monotonicity by the definition: every comparable pair x <= y.
AxiomResult monotone_pairwise(const OpTable& op);
/// Monotonicity restricted to cover pairs of the carrier's induced order.
AxiomResult monotone_by_covers(const OpTable& op);

/// Cover pairs (x,y), x covered by y, of the order induced on `carrier`.
std::vector<ElementPair> induced_covers(const Lattice& L, const ElementSet& carrier);

enum class PointwiseOrder { Equal, Leq, Geq, Incomparable };

std::string_view to_string(PointwiseOrder order);

struct PointwiseComparison {
  PointwiseOrder order = PointwiseOrder::Equal;
  /// First pair where A(x,y) is not <= B(x,y).
  std::optional<ElementPair> a_not_below_b;
  /// First pair where B(x,y) is not <= A(x,y).
  std::optional<ElementPair> b_not_below_a;
};

/// Throws CarrierMismatch when the carriers differ.
PointwiseComparison compare_pointwise(const OpTable& a, const OpTable& b);

/// Restrictions of a uninorm to [0,e]^2 and [e,1]^2 and whether they classify
/// as t-norm and t-conorm.
struct UnderlyingOperators {
  bool tnorm_ok = false;
  bool tconorm_ok = false;
  std::optional<OpTable> tnorm;
  std::optional<OpTable> tconorm;
};

UnderlyingOperators underlying_operators(const OpTable& op, ElementId e);

/// Closure of joins on I_e (within I_e or equal to top) and the dual for
/// meets with bottom. `applicable` reports whether the side hypothesis
/// (I_e incomparable with [e,1[, resp. ]0,e]) holds.
struct ClosureCheck {
  bool applicable = false;
  bool holds = true;
  std::optional<ElementPair> witness;
};

ClosureCheck join_closure_on_incomparables(const Lattice& L, ElementId e);
ClosureCheck meet_closure_on_incomparables(const Lattice& L, ElementId e);

struct AuditCase {
  std::string components;
  bool conditions_hold = false;
  bool is_uninorm = false;
  /// False when I_e is empty: the necessity direction of the iff conditions
  /// is not claimed there, so only sufficiency is audited.
  bool necessity_applicable = true;
  VerificationReport verification;
  ConditionReport conditions;
};

struct AuditReport {
  MethodId method;
  std::vector<AuditCase> cases;
  /// Component sets skipped because a hypothesis condition failed.
  std::size_t skipped = 0;
  bool iff_respected = true;
  /// Indices into `cases` where conditions_hold && !is_uninorm, or
  /// !conditions_hold && is_uninorm with necessity applicable.
  std::vector<std::size_t> violations;
};

/// For each component set: evaluate the method's conditions, skip the set if
/// a hypothesis fails, otherwise build with force and compare the iff
/// conditions with the outcome of check_uninorm. With I_e empty, failing
/// conditions alongside a uninorm are not counted as violations.
AuditReport iff_audit(MethodId method, const Lattice& L, ElementId e, const std::vector<Components>& stream,
                      const std::vector<ElementId>& chain = {});

/// Short text naming the components of a set, e.g. "T=[0 0 0;...] S=...".
std::string describe_components(const Components& c);

}  // namespace unilat
