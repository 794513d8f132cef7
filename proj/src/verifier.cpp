#include "unilat/verifier.hpp"

namespace unilat {

namespace {

AxiomResult commutativity(const OpTable& op) {
  const auto& m = op.carrier().members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (op.at_local(i, j) != op.at_local(j, i)) return {false, {m[i], m[j]}};
    }
  }
  return {};
}

AxiomResult neutrality(const OpTable& op, ElementId e) {
  if (!op.carrier().contains(e)) return {false, {e}};
  for (ElementId x : op.carrier().members()) {
    if (op(e, x) != x || op(x, e) != x) return {false, {x}};
  }
  return {};
}

std::string name_component(const OpTable& op, std::initializer_list<std::pair<CanonicalKind, const char*>> known) {
  for (auto [kind, name] : known) {
    try {
      if (canonical_op(kind, op.carrier()) == op) return name;
    } catch (const Error&) {
    }
  }
  std::string out = "{";
  for (std::size_t i = 0; i < op.cells().size(); ++i) {
    if (i) out += i % op.size() == 0 ? ";" : " ";
    out += op.lattice().label(op.cells()[i]);
  }
  return out + "}";
}

}  // namespace

AssociativityWitness evaluate_triple(const OpTable& op, ElementId x, ElementId y, ElementId z) {
  return {x, y, z, op(x, op(y, z)), op(op(x, y), z)};
}

std::optional<AssociativityWitness> check_associative(const OpTable& op) {
  const auto& m = op.carrier().members();
  const std::size_t k = m.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t ij = m.position(op.at_local(i, j));
      for (std::size_t l = 0; l < k; ++l) {
        ElementId left = op.at_local(i, m.position(op.at_local(j, l)));
        ElementId right = op.at_local(ij, l);
        if (left != right) return AssociativityWitness{m[i], m[j], m[l], left, right};
      }
    }
  }
  return std::nullopt;
}

AxiomResult monotone_pairwise(const OpTable& op) {
  const Lattice& L = op.lattice();
  const auto& m = op.carrier().members();
  for (int arg = 0; arg < 2; ++arg) {
    for (ElementId x : m) {
      for (ElementId y : m) {
        if (x == y || !L.leq(x, y)) continue;
        for (ElementId z : m) {
          ElementId lo = arg == 0 ? op(x, z) : op(z, x);
          ElementId hi = arg == 0 ? op(y, z) : op(z, y);
          if (!L.leq(lo, hi)) return {false, {x, y, z}, arg == 1};
        }
      }
    }
  }
  return {};
}

std::vector<ElementPair> induced_covers(const Lattice& L, const ElementSet& carrier) {
  std::vector<ElementPair> out;
  for (ElementId x : carrier) {
    for (ElementId y : carrier) {
      if (!L.lt(x, y)) continue;
      bool cover = true;
      for (ElementId z : carrier) {
        if (L.lt(x, z) && L.lt(z, y)) {
          cover = false;
          break;
        }
      }
      if (cover) out.push_back({x, y});
    }
  }
  return out;
}

AxiomResult monotone_by_covers(const OpTable& op) {
  const Lattice& L = op.lattice();
  const auto covers = induced_covers(L, op.carrier().members());
  for (int arg = 0; arg < 2; ++arg) {
    for (auto [x, y] : covers) {
      for (ElementId z : op.carrier().members()) {
        ElementId lo = arg == 0 ? op(x, z) : op(z, x);
        ElementId hi = arg == 0 ? op(y, z) : op(z, y);
        if (!L.leq(lo, hi)) return {false, {x, y, z}, arg == 1};
      }
    }
  }
  return {};
}

VerificationReport check_uninorm(const OpTable& op, ElementId e) {
  VerificationReport r;
  r.commutative = commutativity(op);
  if (auto w = check_associative(op)) r.associative = {false, {w->x, w->y, w->z}};
  r.monotone = monotone_by_covers(op);
  r.neutral = neutrality(op, e);
  r.is_uninorm = r.commutative.holds && r.associative.holds && r.monotone.holds && r.neutral.holds;
  return r;
}

std::string_view to_string(PointwiseOrder order) {
  switch (order) {
    case PointwiseOrder::Equal: return "equal";
    case PointwiseOrder::Leq: return "leq";
    case PointwiseOrder::Geq: return "geq";
    case PointwiseOrder::Incomparable: return "incomparable";
  }
  return "?";
}

PointwiseComparison compare_pointwise(const OpTable& a, const OpTable& b) {
  if (!(a.carrier() == b.carrier())) {
    throw Error(ErrorCode::CarrierMismatch, "compared operations live on different carriers");
  }
  const Lattice& L = a.lattice();
  PointwiseComparison c;
  for (ElementId x : a.carrier().members()) {
    for (ElementId y : a.carrier().members()) {
      if (!c.a_not_below_b && !L.leq(a(x, y), b(x, y))) c.a_not_below_b = ElementPair{x, y};
      if (!c.b_not_below_a && !L.leq(b(x, y), a(x, y))) c.b_not_below_a = ElementPair{x, y};
    }
  }
  if (c.a_not_below_b && c.b_not_below_a) {
    c.order = PointwiseOrder::Incomparable;
  } else if (c.a_not_below_b) {
    c.order = PointwiseOrder::Geq;
  } else if (c.b_not_below_a) {
    c.order = PointwiseOrder::Leq;
  }
  return c;
}

UnderlyingOperators underlying_operators(const OpTable& op, ElementId e) {
  const Lattice& L = op.lattice();
  UnderlyingOperators u;
  try {
    u.tnorm.emplace(op.restrict_to(L.interval(op.carrier().minimum().value(), e)));
    u.tnorm_ok = is_kind(*u.tnorm, OperatorKind::Tnorm);
  } catch (const Error&) {
  } catch (const std::bad_optional_access&) {
  }
  try {
    u.tconorm.emplace(op.restrict_to(L.interval(e, op.carrier().maximum().value())));
    u.tconorm_ok = is_kind(*u.tconorm, OperatorKind::Tconorm);
  } catch (const Error&) {
  } catch (const std::bad_optional_access&) {
  }
  return u;
}

ClosureCheck join_closure_on_incomparables(const Lattice& L, ElementId e) {
  const ElementSet I = L.incomparable_with(e);
  const ElementSet above = L.interval(e, L.top(), false, true);
  ClosureCheck c;
  c.applicable = true;
  for (ElementId x : I) {
    for (ElementId y : above) c.applicable = c.applicable && L.incomparable(x, y);
  }
  if (!c.applicable) return c;
  for (ElementId z : I) {
    for (ElementId t : I) {
      ElementId j = L.join(z, t);
      if (!I.contains(j) && j != L.top()) {
        c.holds = false;
        c.witness = ElementPair{z, t};
        return c;
      }
    }
  }
  return c;
}

ClosureCheck meet_closure_on_incomparables(const Lattice& L, ElementId e) {
  const ElementSet I = L.incomparable_with(e);
  const ElementSet below = L.interval(L.bottom(), e, true, false);
  ClosureCheck c;
  c.applicable = true;
  for (ElementId x : I) {
    for (ElementId y : below) c.applicable = c.applicable && L.incomparable(x, y);
  }
  if (!c.applicable) return c;
  for (ElementId z : I) {
    for (ElementId t : I) {
      ElementId m = L.meet(z, t);
      if (!I.contains(m) && m != L.bottom()) {
        c.holds = false;
        c.witness = ElementPair{z, t};
        return c;
      }
    }
  }
  return c;
}

std::string describe_components(const Components& c) {
  std::string out;
  using Known = std::initializer_list<std::pair<CanonicalKind, const char*>>;
  auto add = [&](const char* slot, const OpTable& op, Known known) {
    if (!out.empty()) out += ' ';
    out += slot;
    out += '=';
    out += name_component(op, known);
  };
  using K = CanonicalKind;
  if (c.tnorm) add("T", *c.tnorm, {Known::value_type{K::MeetTnorm, "min"}, Known::value_type{K::DrasticTnorm, "drastic"}});
  if (c.tconorm) add("S", *c.tconorm, {Known::value_type{K::JoinTconorm, "max"}, Known::value_type{K::DrasticTconorm, "drastic"}});
  if (c.subnorm) add("F", *c.subnorm, {Known::value_type{K::MeetSubnorm, "min"}});
  if (c.subconorm) add("R", *c.subconorm, {Known::value_type{K::JoinSubconorm, "max"}});
  for (std::size_t i = 0; i < c.chain_ops.size(); ++i) {
    std::string slot = "B" + std::to_string(i + 1);
    add(slot.c_str(), c.chain_ops[i],
        {Known::value_type{K::MeetTnorm, "min"}, Known::value_type{K::JoinTconorm, "max"}, Known::value_type{K::DrasticTnorm, "drastic"},
         Known::value_type{K::DrasticTconorm, "drastic"}});
  }
  return out;
}

AuditReport iff_audit(MethodId method, const Lattice& L, ElementId e, const std::vector<Components>& stream,
                      const std::vector<ElementId>& chain) {
  AuditReport report{method, {}, 0, true, {}};
  const bool necessity = !L.incomparable_with(e).empty();
  for (const auto& comps : stream) {
    ConstructionSpec spec{L, e, method, comps, chain, true};
    ConditionReport conditions = check_preconditions(spec);
    if (!conditions.hypotheses_hold()) {
      ++report.skipped;
      continue;
    }
    OpTable table = construct(spec);
    AuditCase c;
    c.components = describe_components(comps);
    c.conditions_hold = conditions.iff_hold();
    c.verification = check_uninorm(table, e);
    c.is_uninorm = c.verification.is_uninorm;
    c.necessity_applicable = necessity;
    c.conditions = std::move(conditions);
    if (c.conditions_hold ? !c.is_uninorm : (c.is_uninorm && necessity)) {
      report.iff_respected = false;
      report.violations.push_back(report.cases.size());
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace unilat
