#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/op_table.hpp"

namespace unilat {

/// Every uninorm construction the library knows how to build.
enum class MethodId {
  UTe, USe,      // T / S extended by x v y v e (resp. x ^ y ^ e)
  U1e, U2e,      // t-norm + t-conorm, strict boundary conditions
  URe, UFe,      // t-norm + t-subconorm on L (resp. dual)
  UR, UF,        // t-subconorm on L \ [0,e] (resp. dual)
  Umeet, Ujoin,  // meet/join fill-in around I_e
  Ud, Uc,        // S(x v e, y v e) fill-in (resp. dual)
  U1, U2, U3, U4, U5, U6,
  IterS, IterT,         // iterated over a chain of t-conorm (t-norm) blocks
  IterJoin, IterMeet,   // closed forms of IterS / IterT with join / meet blocks
};

inline constexpr MethodId kAllMethods[] = {
    MethodId::UTe,   MethodId::USe,   MethodId::U1e, MethodId::U2e,   MethodId::URe,      MethodId::UFe,
    MethodId::UR,    MethodId::UF,    MethodId::Umeet, MethodId::Ujoin, MethodId::Ud,     MethodId::Uc,
    MethodId::U1,    MethodId::U2,    MethodId::U3,  MethodId::U4,    MethodId::U5,       MethodId::U6,
    MethodId::IterS, MethodId::IterT, MethodId::IterJoin, MethodId::IterMeet,
};

std::string_view to_string(MethodId method);
/// Case-insensitive; accepts the names printed by to_string. Throws UnknownName.
MethodId parse_method(std::string_view name);

bool is_iterative(MethodId method);

/// Component operators of a construction. Which ones are needed depends on
/// the method; see component_slots().
struct Components {
  std::optional<OpTable> tnorm;
  std::optional<OpTable> tconorm;
  std::optional<OpTable> subnorm;
  std::optional<OpTable> subconorm;
  /// Iterative methods: block operators, one per chain step after the first.
  std::vector<OpTable> chain_ops;
};

struct ConstructionSpec {
  Lattice lattice;
  ElementId e;
  MethodId method;
  Components components;
  /// Iterative methods: a0 < a1 < ... < an (IterS/IterJoin) or
  /// b0 > b1 > ... > bn (IterT/IterMeet). e must be the second entry.
  std::vector<ElementId> chain;
  bool force = false;
};

enum class ComponentSlot { Tnorm, Tconorm, Subnorm, Subconorm, ChainOp };

/// One required component: which slot it fills, the carrier it must live
/// on, and the operator kind it must be.
struct SlotRequirement {
  ComponentSlot slot;
  ElementSet carrier;
  OperatorKind kind;
  std::size_t chain_index = 0;  // ChainOp only: position in chain_ops
};

/// The components `method` needs on lattice L with neutral element e.
/// Iterative methods need `chain`.
std::vector<SlotRequirement> component_slots(MethodId method, const Lattice& L, ElementId e,
                                             const std::vector<ElementId>& chain = {});

enum class ConditionId { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10 };
enum class Requirement { Hypothesis, Iff };

std::string_view to_string(ConditionId id);
std::string_view to_string(Requirement req);
/// Human-readable statement of the condition.
std::string_view describe(ConditionId id);

struct ConditionEntry {
  ConditionId id;
  Requirement required_as;
  bool holds = true;
  std::optional<ElementPair> witness;
};

struct ConditionReport {
  std::vector<ConditionEntry> entries;

  bool all_hold() const;
  bool hypotheses_hold() const;
  bool iff_hold() const;
};

/// The condition set registered for a method, in evaluation order.
std::vector<std::pair<ConditionId, Requirement>> registered_conditions(MethodId method);

/// Evaluates one condition on (L, e) using whichever components it needs.
/// Throws MissingComponent when the condition reads a component that is absent.
ConditionEntry evaluate_condition(ConditionId id, Requirement req, const Lattice& L, ElementId e,
                                  const Components& components);

/// Throws MissingComponent / CarrierMismatch when the spec's components do
/// not fit the method.
ConditionReport check_preconditions(const ConstructionSpec& spec);

/// Error raised by construct() when force is off and a condition fails.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(ConditionReport report);
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

/// Materializes the method's region formula into a table on L. For the
/// iterative methods this is the last table of the iteration.
OpTable construct(const ConstructionSpec& spec);

/// Sets used by one step of the iterative construction over [0,a_{k+1}]
/// (t-conorm version; the t-norm version mirrors it on [b_{k+1},1]).
struct IterRegionPartition {
  ElementSet base;        // [0,e]              (dual: [e,1])
  ElementSet below_inc;   // x <= a_k, x || e   (dual: x >= b_k, x || e)
  ElementSet mid;         // ]e,a_k]            (dual: [b_k,e[)
  ElementSet step_inc;    // x || a_k, x > e    (dual: x || b_k, x < e)
  ElementSet both_inc;    // x || a_k, x || e
  ElementSet block;       // ]a_k,a_{k+1}]      (dual: [b_{k+1},b_k[)
  ElementSet carrier;     // [0,a_{k+1}]        (dual: [b_{k+1},1])
};

/// Partition for the step from chain[k] to chain[k+1] (k >= 1).
IterRegionPartition iter_partition(const Lattice& L, const std::vector<ElementId>& chain, std::size_t k,
                                   bool dual);

/// U_1 = tnorm, U_2, ..., U_n; the i-th table lives on [0,a_i].
std::vector<OpTable> construct_iterated_conorm(const Lattice& L, const std::vector<ElementId>& chain,
                                               const OpTable& tnorm, const std::vector<OpTable>& conorms);
/// Dual: U_1 = tconorm, ...; the i-th table lives on [b_i,1].
std::vector<OpTable> construct_iterated_norm(const Lattice& L, const std::vector<ElementId>& chain,
                                             const OpTable& tconorm, const std::vector<OpTable>& norms);

/// Closed forms for all-join (all-meet) blocks, built directly from the
/// lattice operations without block operators.
std::vector<OpTable> construct_iterated_join(const Lattice& L, const std::vector<ElementId>& chain,
                                             const OpTable& tnorm);
std::vector<OpTable> construct_iterated_meet(const Lattice& L, const std::vector<ElementId>& chain,
                                             const OpTable& tconorm);

/// Components made of the canonical operators (meet / join on the required
/// carriers) for `method`.
Components canonical_components(MethodId method, const Lattice& L, ElementId e,
                                const std::vector<ElementId>& chain = {});

}  // namespace unilat
