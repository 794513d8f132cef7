#include "unilat/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace unilat {

namespace {

struct MethodName {
  MethodId id;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {MethodId::UTe, "ute"},     {MethodId::USe, "use"},       {MethodId::U1e, "u1e"},
    {MethodId::U2e, "u2e"},     {MethodId::URe, "ure"},       {MethodId::UFe, "ufe"},
    {MethodId::UR, "ur"},       {MethodId::UF, "uf"},         {MethodId::Umeet, "umeet"},
    {MethodId::Ujoin, "ujoin"}, {MethodId::Ud, "ud"},         {MethodId::Uc, "uc"},
    {MethodId::U1, "u1"},       {MethodId::U2, "u2"},         {MethodId::U3, "u3"},
    {MethodId::U4, "u4"},       {MethodId::U5, "u5"},         {MethodId::U6, "u6"},
    {MethodId::IterS, "iters"}, {MethodId::IterT, "itert"},   {MethodId::IterJoin, "iterjoin"},
    {MethodId::IterMeet, "itermeet"},
};

/// Named element sets around e that the region formulas are written in.
struct Zones {
  ElementSet B;    // [0,e]
  ElementSet Bo;   // [0,e[
  ElementSet Bl;   // ]0,e]
  ElementSet Bol;  // ]0,e[
  ElementSet A;    // [e,1]
  ElementSet Ao;   // ]e,1]
  ElementSet Ar;   // [e,1[
  ElementSet Aor;  // ]e,1[
  ElementSet I;    // I_e
  ElementSet Z;    // {0}
  ElementSet O;    // {1}
  ElementSet E;    // {e}
  ElementSet notB;  // L \ [0,e]
  ElementSet notA;  // L \ [e,1]

  Zones(const Lattice& L, ElementId e) {
    const ElementId zero = L.bottom(), one = L.top();
    const std::size_t n = L.size();
    B = L.interval(zero, e);
    Bo = L.interval(zero, e, false, true);
    Bl = L.interval(zero, e, true, false);
    Bol = L.interval(zero, e, true, true);
    A = L.interval(e, one);
    Ao = L.interval(e, one, true, false);
    Ar = L.interval(e, one, false, true);
    Aor = L.interval(e, one, true, true);
    I = L.incomparable_with(e);
    Z = ElementSet::where(n, [&](ElementId x) { return x == zero; });
    O = ElementSet::where(n, [&](ElementId x) { return x == one; });
    E = ElementSet::where(n, [&](ElementId x) { return x == e; });
    notB = L.all() - B;
    notA = L.all() - A;
  }
};

PairSet sq(const ElementSet& s) { return PairSet::rect(s, s); }
PairSet rect(const ElementSet& a, const ElementSet& b) { return PairSet::rect(a, b); }
PairSet sym(const ElementSet& a, const ElementSet& b) { return symmetric_rect(a, b); }

struct Clause {
  std::string_view name;
  PairSet region;
  OpTable::Fn value;
};

/// Evaluates the clauses top to bottom on every pair of the carrier. The
/// first matching clause gives the value; any later matching clause must
/// agree with it (RegionOverlap otherwise). Pairs matched by no clause use
/// `otherwise`, or raise RegionGap when there is none.
OpTable materialize(const Carrier& carrier, const std::vector<Clause>& clauses, const OpTable::Fn& otherwise,
                    std::string_view what) {
  const Lattice& L = carrier.lattice();
  return OpTable(carrier, [&](ElementId x, ElementId y) {
    std::optional<ElementId> value;
    std::string_view first;
    for (const auto& c : clauses) {
      if (!c.region.contains(x, y)) continue;
      ElementId v = c.value(x, y);
      if (!value) {
        value = v;
        first = c.name;
      } else if (*value != v) {
        throw Error(ErrorCode::RegionOverlap,
                    std::string(what) + ": clauses '" + std::string(first) + "' and '" + std::string(c.name) +
                        "' disagree at (" + L.label(x) + "," + L.label(y) + ")",
                    {x, y});
      }
    }
    if (value) return *value;
    if (!otherwise) {
      throw Error(ErrorCode::RegionGap,
                  std::string(what) + ": no clause covers (" + L.label(x) + "," + L.label(y) + ")", {x, y});
    }
    return otherwise(x, y);
  });
}

bool same_members(const ElementSet& a, const ElementSet& b) { return a == b; }

void validate_chain(const Lattice& L, const std::vector<ElementId>& chain, bool descending) {
  if (chain.size() < 3) {
    throw Error(ErrorCode::BadChain, "chain needs at least three elements (bound, e, bound)");
  }
  const ElementId first = descending ? L.top() : L.bottom();
  const ElementId last = descending ? L.bottom() : L.top();
  if (chain.front() != first || chain.back() != last) {
    throw Error(ErrorCode::BadChain, descending ? "chain must run from top to bottom" : "chain must run from bottom to top");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    bool ok = descending ? L.lt(chain[i + 1], chain[i]) : L.lt(chain[i], chain[i + 1]);
    if (!ok) {
      throw Error(ErrorCode::BadChain,
                  "chain is not strictly monotone at " + L.label(chain[i]) + ", " + L.label(chain[i + 1]),
                  {chain[i], chain[i + 1]});
    }
  }
}

ErrorCode kind_error(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Tnorm: return ErrorCode::ComponentNotTnorm;
    case OperatorKind::Tconorm: return ErrorCode::ComponentNotConorm;
    case OperatorKind::Tsubnorm: return ErrorCode::ComponentNotSubnorm;
    case OperatorKind::Tsubconorm: return ErrorCode::ComponentNotSubconorm;
  }
  return ErrorCode::MissingComponent;
}

void validate_component(const OpTable& op, const Lattice& L, const ElementSet& carrier, OperatorKind kind,
                        std::string_view slot) {
  if (!op.lattice().same_as(L) || !same_members(op.carrier().members(), carrier)) {
    throw Error(ErrorCode::CarrierMismatch, std::string(slot) + " is not defined on the carrier the method requires");
  }
  if (!is_kind(op, kind)) {
    throw Error(kind_error(kind), std::string(slot) + " is not a " + std::string(to_string(kind)) + " on its carrier");
  }
}

const OpTable* slot_table(const Components& c, const SlotRequirement& s) {
  switch (s.slot) {
    case ComponentSlot::Tnorm: return c.tnorm ? &*c.tnorm : nullptr;
    case ComponentSlot::Tconorm: return c.tconorm ? &*c.tconorm : nullptr;
    case ComponentSlot::Subnorm: return c.subnorm ? &*c.subnorm : nullptr;
    case ComponentSlot::Subconorm: return c.subconorm ? &*c.subconorm : nullptr;
    case ComponentSlot::ChainOp: return s.chain_index < c.chain_ops.size() ? &c.chain_ops[s.chain_index] : nullptr;
  }
  return nullptr;
}

std::string_view slot_name(ComponentSlot s) {
  switch (s) {
    case ComponentSlot::Tnorm: return "t-norm";
    case ComponentSlot::Tconorm: return "t-conorm";
    case ComponentSlot::Subnorm: return "t-subnorm";
    case ComponentSlot::Subconorm: return "t-subconorm";
    case ComponentSlot::ChainOp: return "block operator";
  }
  return "?";
}

void validate_components(const ConstructionSpec& spec) {
  const Lattice& L = spec.lattice;
  if (spec.e.index() >= L.size() || spec.e == L.bottom() || spec.e == L.top()) {
    throw Error(ErrorCode::InvalidNeutral, "neutral element must differ from the bounds");
  }
  if (is_iterative(spec.method)) {
    const bool dual = spec.method == MethodId::IterT || spec.method == MethodId::IterMeet;
    validate_chain(L, spec.chain, dual);
    if (spec.chain[1] != spec.e) {
      throw Error(ErrorCode::BadChain, "the second chain element must be the neutral element");
    }
  }
  for (const auto& s : component_slots(spec.method, L, spec.e, spec.chain)) {
    const OpTable* op = slot_table(spec.components, s);
    if (!op) throw Error(ErrorCode::MissingComponent, std::string(to_string(spec.method)) + " needs a " +
                                                          std::string(slot_name(s.slot)));
    validate_component(*op, L, s.carrier, s.kind, slot_name(s.slot));
  }
}

ElementId value_or_missing(const std::optional<OpTable>& op, std::string_view name, ElementId x, ElementId y) {
  if (!op) throw Error(ErrorCode::MissingComponent, std::string(name) + " is required");
  return (*op)(x, y);
}

/// Region formulas for the non-iterative methods.
OpTable build_formula(const ConstructionSpec& spec) {
  const Lattice& L = spec.lattice;
  const ElementId e = spec.e;
  const Zones z(L, e);
  const RegionSets rs = regions(L, e);
  const Components& c = spec.components;
  const Carrier whole(L);
  const ElementId zero = L.bottom(), one = L.top();

  auto T = [&](ElementId x, ElementId y) { return value_or_missing(c.tnorm, "t-norm", x, y); };
  auto S = [&](ElementId x, ElementId y) { return value_or_missing(c.tconorm, "t-conorm", x, y); };
  auto R = [&](ElementId x, ElementId y) { return value_or_missing(c.subconorm, "t-subconorm", x, y); };
  auto F = [&](ElementId x, ElementId y) { return value_or_missing(c.subnorm, "t-subnorm", x, y); };
  auto X = [](ElementId x, ElementId) { return x; };
  auto Y = [](ElementId, ElementId y) { return y; };
  auto J = [&](ElementId x, ElementId y) { return L.join(x, y); };
  auto M = [&](ElementId x, ElementId y) { return L.meet(x, y); };
  auto ONE = [&](ElementId, ElementId) { return one; };
  auto ZERO = [&](ElementId, ElementId) { return zero; };

  const std::string_view name = to_string(spec.method);
  std::vector<Clause> cl;
  OpTable::Fn otherwise;

  switch (spec.method) {
    case MethodId::UTe:
      cl = {{"T", sq(z.B), T}, {"x", rect(z.I, z.B), X}, {"y", rect(z.B, z.I), Y}};
      otherwise = [&](ElementId x, ElementId y) { return L.join(L.join(x, y), e); };
      break;
    case MethodId::USe:
      cl = {{"S", sq(z.A), S}, {"x", rect(z.I, z.A), X}, {"y", rect(z.A, z.I), Y}};
      otherwise = [&](ElementId x, ElementId y) { return L.meet(L.meet(x, y), e); };
      break;
    case MethodId::U1e:
      cl = {{"T", sq(z.B), T},
            {"S", sq(z.A), S},
            {"x", rect(z.I, z.Ar) | rect(z.I, z.Bol), X},
            {"y", rect(z.Ar, z.I) | rect(z.Bol, z.I), Y},
            {"join", sq(z.I) | sym(z.I, z.O) | sym(z.Bol, z.O), J}};
      otherwise = M;
      break;
    case MethodId::U2e:
      cl = {{"T", sq(z.B), T},
            {"S", sq(z.A), S},
            {"x", rect(z.I, z.Aor) | rect(z.I, z.Bl), X},
            {"y", rect(z.Aor, z.I) | rect(z.Bl, z.I), Y},
            {"meet", sq(z.I) | sym(z.I, z.Z) | sym(z.Aor, z.Z), M}};
      otherwise = J;
      break;
    case MethodId::URe:
      cl = {{"T", sq(z.B), T},
            {"x", rect(z.I, z.B) | rect(z.I, z.Ar), X},
            {"y", rect(z.B, z.I) | rect(z.Ar, z.I), Y},
            {"R", sq(z.I) | sq(z.Ao), R},
            {"join", rs.D_e, J}};
      otherwise = M;
      break;
    case MethodId::UFe:
      cl = {{"S", sq(z.A), S},
            {"x", rect(z.I, z.Bl) | rect(z.I, z.A), X},
            {"y", rect(z.Bl, z.I) | rect(z.A, z.I), Y},
            {"F", sq(z.I) | sq(z.Bo), F},
            {"meet", rs.E_e, M}};
      otherwise = J;
      break;
    case MethodId::UR:
      cl = {{"T", sq(z.B), T},
            {"x", rect(z.Bo, z.notB) | rect(z.notB, z.E), X},
            {"y", rect(z.notB, z.Bo) | rect(z.E, z.notB), Y},
            {"R", sq(z.notB), R}};
      break;
    case MethodId::UF:
      cl = {{"S", sq(z.A), S},
            {"x", rect(z.Ao, z.notA) | rect(z.notA, z.E), X},
            {"y", rect(z.notA, z.Ao) | rect(z.E, z.notA), Y},
            {"F", sq(z.notA), F}};
      break;
    case MethodId::Umeet:
      cl = {{"T", sq(z.B), T},
            {"meet", sym(z.Bo, z.I) | sym(z.Bo, z.A), M},
            {"y", rect(z.E, z.I), Y},
            {"x", rect(z.I, z.E), X}};
      otherwise = J;
      break;
    case MethodId::Ujoin:
      cl = {{"S", sq(z.A), S},
            {"join", sym(z.Ao, z.I) | sym(z.Bo, z.Ao), J},
            {"y", rect(z.E, z.I), Y},
            {"x", rect(z.I, z.E), X}};
      otherwise = M;
      break;
    case MethodId::Ud:
      cl = {{"T", sq(z.B), T},
            {"S", sq(z.Ao), S},
            {"x", rect(z.I | z.Ao, z.B), X},
            {"y", rect(z.B, z.I | z.Ao), Y}};
      otherwise = [&](ElementId x, ElementId y) { return S(L.join(x, e), L.join(y, e)); };
      break;
    case MethodId::Uc:
      cl = {{"T", sq(z.Bo), T},
            {"S", sq(z.A), S},
            {"x", rect(z.I | z.Bo, z.A), X},
            {"y", rect(z.A, z.I | z.Bo), Y}};
      otherwise = [&](ElementId x, ElementId y) { return T(L.meet(x, e), L.meet(y, e)); };
      break;
    case MethodId::U1:
      cl = {{"T", sq(z.B), T},
            {"S", sq(z.A), S},
            {"x", rect(z.I, z.Ar) | rect(z.I, z.Bo), X},
            {"y", rect(z.Ar, z.I) | rect(z.Bo, z.I), Y},
            {"join", sq(z.I) | sym(z.I, z.O) | sym(z.Bo, z.O), J}};
      otherwise = M;
      break;
    case MethodId::U2:
      cl = {{"T", sq(z.B), T},
            {"S", sq(z.A), S},
            {"x", rect(z.I, z.Ao) | rect(z.I, z.Bl), X},
            {"y", rect(z.Ao, z.I) | rect(z.Bl, z.I), Y},
            {"meet", sq(z.I) | sym(z.I, z.Z) | sym(z.Ao, z.Z), M}};
      otherwise = J;
      break;
    case MethodId::U3:
      cl = {{"T", sq(z.B), T},
            {"x", rect(z.I, z.Bl) | rect(z.I, z.Aor), X},
            {"y", rect(z.Bl, z.I) | rect(z.Aor, z.I), Y},
            {"R", sq(z.I) | sq(z.Ao), R},
            {"join", rs.D_e_prime, J}};
      otherwise = M;
      break;
    case MethodId::U4:
      cl = {{"S", sq(z.A), S},
            {"x", rect(z.I, z.Ar) | rect(z.I, z.Bol), X},
            {"y", rect(z.Ar, z.I) | rect(z.Bol, z.I), Y},
            {"F", sq(z.I) | sq(z.Bo), F},
            {"meet", rs.E_e_prime, M}};
      otherwise = J;
      break;
    case MethodId::U5:
      cl = {{"T", sq(z.B), T},
            {"meet", sym(z.Bo, z.I) | sym(z.Bo, z.Ao), M},
            {"y", rect(z.E, z.I) | rect(z.E, z.Ao), Y},
            {"x", rect(z.I, z.E) | rect(z.Ao, z.E), X},
            {"R", sq(z.I), R},
            {"one", sym(z.I, z.Ao) | sq(z.Ao), ONE}};
      break;
    case MethodId::U6:
      cl = {{"S", sq(z.A), S},
            {"join", sym(z.Ao, z.I) | sym(z.Bo, z.Ao), J},
            {"y", rect(z.E, z.I) | rect(z.E, z.Bo), Y},
            {"x", rect(z.I, z.E) | rect(z.Bo, z.E), X},
            {"F", sq(z.I), F},
            {"zero", sym(z.I, z.Bo) | sq(z.Bo), ZERO}};
      break;
    default:
      throw Error(ErrorCode::UnknownName, "not a region-formula method");
  }
  return materialize(whole, cl, otherwise, name);
}

/// One step of the iteration: the table on chain[k+1]'s carrier from the
/// table `prev` on chain[k]'s carrier. `block_op` is the block operator, or
/// empty for the closed join/meet form.
OpTable iterate_step(const Lattice& L, const std::vector<ElementId>& chain, std::size_t k, bool dual,
                     const OpTable& prev, const OpTable* block_op) {
  const IterRegionPartition p = iter_partition(L, chain, k, dual);
  const ElementId pivot = chain[k];
  const ElementSet& prev_set = prev.carrier().members();
  auto lat = [&](ElementId x, ElementId y) { return dual ? L.meet(x, y) : L.join(x, y); };

  std::vector<Clause> cl;
  cl.push_back({"previous", sq(prev_set), [&](ElementId x, ElementId y) { return prev(x, y); }});
  const PairSet lattice_op_region = sym(p.base, p.step_inc | p.block);
  if (block_op) {
    cl.push_back({"block", sq(p.block), [&](ElementId x, ElementId y) { return (*block_op)(x, y); }});
    cl.push_back({dual ? "meet" : "join", lattice_op_region, lat});
  } else {
    cl.push_back({dual ? "meet" : "join", sq(p.block) | lattice_op_region, lat});
  }
  cl.push_back({"x", rect(p.both_inc, p.base), [](ElementId x, ElementId) { return x; }});
  cl.push_back({"y", rect(p.base, p.both_inc), [](ElementId, ElementId y) { return y; }});

  OpTable::Fn otherwise;
  if (block_op) {
    otherwise = [&](ElementId x, ElementId y) { return (*block_op)(lat(x, pivot), lat(y, pivot)); };
  } else {
    otherwise = [&](ElementId x, ElementId y) { return lat(lat(x, y), pivot); };
  }
  return materialize(Carrier(L, p.carrier), cl, otherwise, dual ? "itert" : "iters");
}

std::vector<OpTable> iterate(const Lattice& L, const std::vector<ElementId>& chain, bool dual, const OpTable& first,
                             const std::vector<OpTable>* block_ops) {
  validate_chain(L, chain, dual);
  const ElementId e = chain[1];
  const ElementSet first_carrier = dual ? L.interval(e, L.top()) : L.interval(L.bottom(), e);
  validate_component(first, L, first_carrier, dual ? OperatorKind::Tconorm : OperatorKind::Tnorm,
                     dual ? "t-conorm" : "t-norm");
  const std::size_t steps = chain.size() - 2;
  if (block_ops) {
    if (block_ops->size() != steps) {
      throw Error(ErrorCode::MissingComponent, "expected " + std::to_string(steps) + " block operators, got " +
                                                   std::to_string(block_ops->size()));
    }
    for (std::size_t j = 0; j < steps; ++j) {
      ElementSet block = dual ? L.interval(chain[j + 2], chain[j + 1]) : L.interval(chain[j + 1], chain[j + 2]);
      validate_component((*block_ops)[j], L, block, dual ? OperatorKind::Tnorm : OperatorKind::Tconorm,
                         "block operator");
    }
  }
  std::vector<OpTable> out{first};
  for (std::size_t k = 1; k <= steps; ++k) {
    const OpTable* op = block_ops ? &(*block_ops)[k - 1] : nullptr;
    out.push_back(iterate_step(L, chain, k, dual, out.back(), op));
  }
  return out;
}

}  // namespace

std::string_view to_string(MethodId method) {
  for (const auto& m : kMethodNames) {
    if (m.id == method) return m.name;
  }
  return "?";
}

MethodId parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (const auto& m : kMethodNames) {
    if (m.name == lower) return m.id;
  }
  throw Error(ErrorCode::UnknownName, "unknown method '" + std::string(name) + "'");
}

bool is_iterative(MethodId m) {
  return m == MethodId::IterS || m == MethodId::IterT || m == MethodId::IterJoin || m == MethodId::IterMeet;
}

std::vector<SlotRequirement> component_slots(MethodId method, const Lattice& L, ElementId e,
                                             const std::vector<ElementId>& chain) {
  const ElementId zero = L.bottom(), one = L.top();
  const ElementSet below = L.interval(zero, e);
  const ElementSet above = L.interval(e, one);
  const ElementSet all = L.all();
  const SlotRequirement tnorm{ComponentSlot::Tnorm, below, OperatorKind::Tnorm};
  const SlotRequirement tconorm{ComponentSlot::Tconorm, above, OperatorKind::Tconorm};
  const SlotRequirement subconorm{ComponentSlot::Subconorm, all, OperatorKind::Tsubconorm};
  const SlotRequirement subnorm{ComponentSlot::Subnorm, all, OperatorKind::Tsubnorm};

  switch (method) {
    case MethodId::UTe:
    case MethodId::Umeet:
    case MethodId::IterJoin:
      return {tnorm};
    case MethodId::USe:
    case MethodId::Ujoin:
    case MethodId::IterMeet:
      return {tconorm};
    case MethodId::U1e:
    case MethodId::U2e:
    case MethodId::U1:
    case MethodId::U2:
    case MethodId::Ud:
    case MethodId::Uc:
      return {tnorm, tconorm};
    case MethodId::URe:
    case MethodId::U3:
    case MethodId::U5:
      return {tnorm, subconorm};
    case MethodId::UFe:
    case MethodId::U4:
    case MethodId::U6:
      return {tconorm, subnorm};
    case MethodId::UR:
      return {tnorm, {ComponentSlot::Subconorm, all - below, OperatorKind::Tsubconorm}};
    case MethodId::UF:
      return {tconorm, {ComponentSlot::Subnorm, all - above, OperatorKind::Tsubnorm}};
    case MethodId::IterS:
    case MethodId::IterT: {
      const bool dual = method == MethodId::IterT;
      std::vector<SlotRequirement> out{dual ? tconorm : tnorm};
      for (std::size_t j = 0; j + 2 < chain.size(); ++j) {
        ElementSet block = dual ? L.interval(chain[j + 2], chain[j + 1]) : L.interval(chain[j + 1], chain[j + 2]);
        out.push_back({ComponentSlot::ChainOp, block, dual ? OperatorKind::Tnorm : OperatorKind::Tconorm, j});
      }
      return out;
    }
  }
  return {};
}

std::string_view to_string(ConditionId id) {
  static constexpr std::string_view names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10"};
  return names[static_cast<int>(id) - 1];
}

std::string_view to_string(Requirement req) { return req == Requirement::Hypothesis ? "hypothesis" : "iff"; }

std::string_view describe(ConditionId id) {
  switch (id) {
    case ConditionId::C1: return "x || y for all x in I_e, y in [e,1[";
    case ConditionId::C2: return "x || y for all x in I_e, y in ]0,e]";
    case ConditionId::C3: return "S_e(x,y) < 1 for all x,y in [e,1[";
    case ConditionId::C4: return "T_e(x,y) > 0 for all x,y in ]0,e]";
    case ConditionId::C5: return "R(x,y) < 1 for all x,y in ]e,1[";
    case ConditionId::C6: return "F(x,y) > 0 for all x,y in ]0,e[";
    case ConditionId::C7: return "x > y for all x in I_e, y in [0,e[";
    case ConditionId::C8: return "x < y for all x in I_e, y in ]e,1]";
    case ConditionId::C9: return "y < x for all x in I_e, y in ]0,e[";
    case ConditionId::C10: return "x < y for all x in I_e, y in ]e,1[";
  }
  return "?";
}

bool ConditionReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& c) { return c.holds; });
}

bool ConditionReport::hypotheses_hold() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& c) { return c.required_as != Requirement::Hypothesis || c.holds; });
}

bool ConditionReport::iff_hold() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& c) { return c.required_as != Requirement::Iff || c.holds; });
}

std::vector<std::pair<ConditionId, Requirement>> registered_conditions(MethodId method) {
  using C = ConditionId;
  constexpr auto H = Requirement::Hypothesis;
  constexpr auto F = Requirement::Iff;
  switch (method) {
    case MethodId::U1: return {{C::C1, H}, {C::C3, F}};
    case MethodId::U2: return {{C::C2, H}, {C::C4, F}};
    case MethodId::U3: return {{C::C1, H}, {C::C4, F}, {C::C5, F}};
    case MethodId::U4: return {{C::C2, H}, {C::C6, F}, {C::C3, F}};
    case MethodId::U5: return {{C::C1, H}, {C::C7, F}};
    case MethodId::U6: return {{C::C2, H}, {C::C8, F}};
    case MethodId::U1e: return {{C::C1, H}, {C::C4, F}, {C::C3, F}};
    case MethodId::U2e: return {{C::C2, H}, {C::C4, F}, {C::C3, F}};
    case MethodId::URe: return {{C::C1, H}, {C::C5, F}};
    case MethodId::UFe: return {{C::C2, H}, {C::C6, F}};
    case MethodId::UR: return {{C::C9, F}};
    case MethodId::UF: return {{C::C10, F}};
    case MethodId::Umeet: return {{C::C7, F}};
    case MethodId::Ujoin: return {{C::C8, F}};
    default: return {};
  }
}

ConditionEntry evaluate_condition(ConditionId id, Requirement req, const Lattice& L, ElementId e,
                                  const Components& comps) {
  const Zones z(L, e);
  ConditionEntry entry{id, req, true, std::nullopt};

  auto pointwise = [&](const ElementSet& xs, const ElementSet& ys, auto&& ok) {
    for (ElementId x : xs) {
      for (ElementId y : ys) {
        if (!ok(x, y)) {
          entry.holds = false;
          entry.witness = ElementPair{x, y};
          return;
        }
      }
    }
  };
  auto boundary = [&](const std::optional<OpTable>& op, std::string_view name, BoundaryKind kind,
                      const ElementSet& domain) {
    if (!op) throw Error(ErrorCode::MissingComponent, std::string(to_string(id)) + " needs a " + std::string(name));
    BoundaryReport r = boundary_conditions(*op, kind, domain);
    entry.holds = r.holds;
    entry.witness = r.witness;
  };

  switch (id) {
    case ConditionId::C1:
      pointwise(z.I, z.Ar, [&](ElementId x, ElementId y) { return L.incomparable(x, y); });
      break;
    case ConditionId::C2:
      pointwise(z.I, z.Bl, [&](ElementId x, ElementId y) { return L.incomparable(x, y); });
      break;
    case ConditionId::C3: boundary(comps.tconorm, "t-conorm", BoundaryKind::StrictBelowOne, z.Ar); break;
    case ConditionId::C4: boundary(comps.tnorm, "t-norm", BoundaryKind::StrictAboveZero, z.Bl); break;
    case ConditionId::C5: boundary(comps.subconorm, "t-subconorm", BoundaryKind::StrictBelowOne, z.Aor); break;
    case ConditionId::C6: boundary(comps.subnorm, "t-subnorm", BoundaryKind::StrictAboveZero, z.Bol); break;
    case ConditionId::C7:
      pointwise(z.I, z.Bo, [&](ElementId x, ElementId y) { return L.lt(y, x); });
      break;
    case ConditionId::C8:
      pointwise(z.I, z.Ao, [&](ElementId x, ElementId y) { return L.lt(x, y); });
      break;
    case ConditionId::C9:
      pointwise(z.I, z.Bol, [&](ElementId x, ElementId y) { return L.lt(y, x); });
      break;
    case ConditionId::C10:
      pointwise(z.I, z.Aor, [&](ElementId x, ElementId y) { return L.lt(x, y); });
      break;
  }
  return entry;
}

ConditionReport check_preconditions(const ConstructionSpec& spec) {
  validate_components(spec);
  ConditionReport report;
  for (auto [id, req] : registered_conditions(spec.method)) {
    report.entries.push_back(evaluate_condition(id, req, spec.lattice, spec.e, spec.components));
  }
  return report;
}

PreconditionError::PreconditionError(ConditionReport report)
    : Error(ErrorCode::PreconditionViolated,
            [&] {
              std::string msg = "failed conditions:";
              for (const auto& c : report.entries) {
                if (!c.holds) msg += " " + std::string(to_string(c.id));
              }
              return msg;
            }()),
      report_(std::move(report)) {}

OpTable construct(const ConstructionSpec& spec) {
  ConditionReport report = check_preconditions(spec);
  if (!spec.force && !report.all_hold()) throw PreconditionError(std::move(report));

  const Lattice& L = spec.lattice;
  const Components& c = spec.components;
  switch (spec.method) {
    case MethodId::IterS: return construct_iterated_conorm(L, spec.chain, *c.tnorm, c.chain_ops).back();
    case MethodId::IterT: return construct_iterated_norm(L, spec.chain, *c.tconorm, c.chain_ops).back();
    case MethodId::IterJoin: return construct_iterated_join(L, spec.chain, *c.tnorm).back();
    case MethodId::IterMeet: return construct_iterated_meet(L, spec.chain, *c.tconorm).back();
    default: return build_formula(spec);
  }
}

IterRegionPartition iter_partition(const Lattice& L, const std::vector<ElementId>& chain, std::size_t k, bool dual) {
  if (k < 1 || k + 1 >= chain.size()) throw Error(ErrorCode::BadChain, "iteration step out of range");
  const ElementId e = chain[1];
  const ElementId pivot = chain[k];
  const ElementId next = chain[k + 1];
  IterRegionPartition p;
  if (!dual) {
    p.carrier = L.interval(L.bottom(), next);
    p.base = L.interval(L.bottom(), e);
    p.mid = L.interval(e, pivot, true, false);
    p.block = L.interval(pivot, next, true, false);
  } else {
    p.carrier = L.interval(next, L.top());
    p.base = L.interval(e, L.top());
    p.mid = L.interval(pivot, e, false, true);
    p.block = L.interval(next, pivot, false, true);
  }
  const std::size_t n = L.size();
  p.below_inc = ElementSet::where(n, [&](ElementId x) {
    return (dual ? L.leq(pivot, x) : L.leq(x, pivot)) && L.incomparable(x, e);
  });
  p.step_inc = ElementSet::where(n, [&](ElementId x) {
    return p.carrier.contains(x) && L.incomparable(x, pivot) && (dual ? L.lt(x, e) : L.lt(e, x));
  });
  p.both_inc = ElementSet::where(n, [&](ElementId x) {
    return p.carrier.contains(x) && L.incomparable(x, pivot) && L.incomparable(x, e);
  });
  return p;
}

std::vector<OpTable> construct_iterated_conorm(const Lattice& L, const std::vector<ElementId>& chain,
                                               const OpTable& tnorm, const std::vector<OpTable>& conorms) {
  return iterate(L, chain, false, tnorm, &conorms);
}

std::vector<OpTable> construct_iterated_norm(const Lattice& L, const std::vector<ElementId>& chain,
                                             const OpTable& tconorm, const std::vector<OpTable>& norms) {
  return iterate(L, chain, true, tconorm, &norms);
}

std::vector<OpTable> construct_iterated_join(const Lattice& L, const std::vector<ElementId>& chain,
                                             const OpTable& tnorm) {
  return iterate(L, chain, false, tnorm, nullptr);
}

std::vector<OpTable> construct_iterated_meet(const Lattice& L, const std::vector<ElementId>& chain,
                                             const OpTable& tconorm) {
  return iterate(L, chain, true, tconorm, nullptr);
}

Components canonical_components(MethodId method, const Lattice& L, ElementId e,
                                const std::vector<ElementId>& chain) {
  Components c;
  for (const auto& s : component_slots(method, L, e, chain)) {
    Carrier carrier(L, s.carrier);
    switch (s.kind) {
      case OperatorKind::Tnorm:
        (s.slot == ComponentSlot::ChainOp ? c.chain_ops.emplace_back(canonical_op(CanonicalKind::MeetTnorm, carrier))
                                          : c.tnorm.emplace(canonical_op(CanonicalKind::MeetTnorm, carrier)));
        break;
      case OperatorKind::Tconorm:
        (s.slot == ComponentSlot::ChainOp
             ? c.chain_ops.emplace_back(canonical_op(CanonicalKind::JoinTconorm, carrier))
             : c.tconorm.emplace(canonical_op(CanonicalKind::JoinTconorm, carrier)));
        break;
      case OperatorKind::Tsubnorm: c.subnorm.emplace(canonical_op(CanonicalKind::MeetSubnorm, carrier)); break;
      case OperatorKind::Tsubconorm: c.subconorm.emplace(canonical_op(CanonicalKind::JoinSubconorm, carrier)); break;
    }
  }
  return c;
}

}  // namespace unilat
