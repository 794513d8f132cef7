#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace testing;

namespace {

OpTable golden_op(const Golden& g) {
  Lattice L = builtin(g.lattice);
  std::vector<ElementId> cells;
  for (const auto& row : grid_of(g.rows))
    for (const auto& v : row) cells.push_back(L.at(v));
  return OpTable(Carrier(L), cells);
}

void check_against_oracle(const Lattice& L, const OpTable& op) {
  oracle::Poset p = to_poset(L);
  oracle::Op o = to_op(op);
  OpClassReport r = classify_op(op);
  auto comm = oracle::first_comm_violation(o);
  CHECK(r.commutative.holds == !comm);
  auto assoc = oracle::first_assoc_violation(o);
  CHECK(r.associative.holds == !assoc);
  if (assoc) {
    REQUIRE(r.associative.witness.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(static_cast<int>(r.associative.witness[i].index()) == (*assoc)[i]);
  }
  CHECK(r.monotone.holds == oracle::monotone(p, o));
  std::optional<int> neutral;
  for (int x : o.carrier)
    if (!neutral && oracle::neutral(o, x)) neutral = x;
  CHECK(r.neutral.has_value() == neutral.has_value());
  if (neutral) CHECK(static_cast<int>(r.neutral->index()) == *neutral);
}

}  // namespace

TEST_CASE("canonical operators on L1") {
  Lattice L = builtin("L1");
  ElementId e = L.at("e"), g = L.at("g");
  Carrier above(L, L.interval(e, L.top()));
  OpTable S = canonical_op(CanonicalKind::JoinTconorm, above);
  CHECK(S(g, g) == g);
  CHECK(S(e, g) == g);
  OpClassReport r = classify_op(S);
  CHECK(r.semigroup_monotone());
  CHECK(r.neutral == e);
  CHECK(is_kind(S, OperatorKind::Tconorm));

  OpTable F = canonical_op(CanonicalKind::MeetSubnorm, Carrier(L));
  OpClassReport rf = classify_op(F);
  CHECK(rf.subnorm_bound.holds);
  CHECK(rf.associative.holds);
  CHECK(rf.neutral == L.top());
  CHECK(is_kind(F, OperatorKind::Tsubnorm));
  CHECK_FALSE(is_kind(F, OperatorKind::Tsubconorm));
}

TEST_CASE("meet on a chain is min") {
  Lattice L = builtin("chain5");
  OpTable T = canonical_op(CanonicalKind::MeetTnorm, Carrier(L, L.interval(L.bottom(), L.at("c3"))));
  for (ElementId x : T.carrier().members())
    for (ElementId y : T.carrier().members()) CHECK(T(x, y) == std::min(x, y));
}

TEST_CASE("drastic conorm on a three-element chain") {
  Lattice P = builtin("probe_P");
  ElementId e = P.at("e"), s = P.at("s");
  OpTable S = canonical_op(CanonicalKind::DrasticTconorm, Carrier(P, P.interval(e, P.top())));
  CHECK(S(s, s) == P.top());
  CHECK(S(e, s) == s);
  CHECK(is_kind(S, OperatorKind::Tconorm));
  BoundaryReport b = boundary_conditions(S, BoundaryKind::StrictBelowOne);
  CHECK_FALSE(b.holds);
  REQUIRE(b.witness);
  CHECK(b.witness->x == s);
  CHECK(b.witness->y == s);

  OpTable T = canonical_op(CanonicalKind::DrasticTnorm, Carrier(P, P.interval(P.bottom(), s)));
  CHECK(T(e, e) == P.bottom());
  CHECK(is_kind(T, OperatorKind::Tnorm));
}

TEST_CASE("boundary conditions with canonical operators") {
  Lattice L = builtin("L1");
  ElementId e = L.at("e");
  OpTable S = canonical_op(CanonicalKind::JoinTconorm, Carrier(L, L.interval(e, L.top())));
  CHECK(boundary_conditions(S, BoundaryKind::StrictBelowOne).holds);
  OpTable T = canonical_op(CanonicalKind::MeetTnorm, Carrier(L, L.interval(L.bottom(), e)));
  CHECK(boundary_conditions(T, BoundaryKind::StrictAboveZero).holds);
  // Meet of the two atoms of the diamond is 0.
  Lattice M = builtin("M2");
  OpTable TM = canonical_op(CanonicalKind::MeetSubnorm, Carrier(M));
  BoundaryReport b = boundary_conditions(TM, BoundaryKind::StrictAboveZero);
  CHECK_FALSE(b.holds);
  CHECK(b.witness->x == M.at("e"));
  CHECK(b.witness->y == M.at("c"));
  // Restricting the domain to one atom removes the violation.
  CHECK(boundary_conditions(TM, BoundaryKind::StrictAboveZero,
                            ElementSet::where(M.size(), [&](ElementId x) { return x == M.at("e"); }))
            .holds);
}

TEST_CASE("U1 on L1 classified with claimed neutral e") {
  const Golden& g = golden_tables()[0];
  OpTable U = golden_op(g);
  const Lattice& L = U.lattice();
  OpClassReport r = classify_op(U, L.at("e"));
  CHECK_FALSE(r.associative.holds);
  CHECK(r.neutral == L.at("e"));
  CHECK(r.neutral_claim.holds);
  // The first witness in index order is checked against the oracle; the
  // triple discussed with the table must also be a violation.
  auto first = oracle::first_assoc_violation(to_op(U));
  REQUIRE(first);
  CHECK(static_cast<int>(r.associative.witness[0].index()) == (*first)[0]);
  ElementId a = L.at("a"), c = L.at("c"), f = L.at("f");
  CHECK(U(a, U(c, f)) == a);
  CHECK(U(U(a, c), f) == L.at("g"));
}

TEST_CASE("wrong neutral claim carries a witness") {
  Lattice L = builtin("L1");
  OpTable J = canonical_op(CanonicalKind::JoinSubconorm, Carrier(L));
  OpClassReport r = classify_op(J, L.at("e"));
  CHECK_FALSE(r.neutral_claim.holds);
  REQUIRE(r.neutral_claim.witness.size() == 1);
  ElementId x = r.neutral_claim.witness[0];
  CHECK((J(L.at("e"), x) != x || J(x, L.at("e")) != x));
  CHECK(r.neutral == L.bottom());
}

TEST_CASE("canonical norms and conorms classify correctly on every interval") {
  for (const Lattice& L : corpus()) {
    for (ElementId a : L.all()) {
      for (ElementId b : L.all()) {
        if (!L.leq(a, b)) continue;
        Carrier c(L, L.interval(a, b));
        OpTable T = canonical_op(CanonicalKind::MeetTnorm, c);
        OpTable S = canonical_op(CanonicalKind::JoinTconorm, c);
        CHECK(classify_op(T, b).neutral == b);
        CHECK(classify_op(S, a).neutral == a);
        CHECK(is_kind(T, OperatorKind::Tnorm));
        CHECK(is_kind(S, OperatorKind::Tconorm));
        CHECK(is_kind(canonical_op(CanonicalKind::DrasticTnorm, c), OperatorKind::Tnorm));
        CHECK(is_kind(canonical_op(CanonicalKind::DrasticTconorm, c), OperatorKind::Tconorm));
      }
    }
  }
}

TEST_CASE("classify_op agrees with the naive checks on random tables") {
  std::mt19937_64 rng(7);
  for (const Lattice& L : corpus()) {
    if (L.size() > 6) continue;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<ElementId> cells(L.size() * L.size());
      const bool symmetric = trial % 2 == 0;
      for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j) {
          if (symmetric && j < i) {
            cells[i * L.size() + j] = cells[j * L.size() + i];
          } else {
            cells[i * L.size() + j] = ElementId(rng() % L.size());
          }
        }
      check_against_oracle(L, OpTable(Carrier(L), cells));
    }
    check_against_oracle(L, canonical_op(CanonicalKind::MeetSubnorm, Carrier(L)));
    check_against_oracle(L, canonical_op(CanonicalKind::JoinSubconorm, Carrier(L)));
  }
}

TEST_CASE("classify_op agrees with the naive checks on enumerated operators") {
  for (const Lattice& L : corpus()) {
    if (L.size() > 5) continue;
    for (auto kind : {OperatorKind::Tsubnorm, OperatorKind::Tsubconorm}) {
      for (const OpTable& op : enumerate_operators(kind, Carrier(L), 200)) check_against_oracle(L, op);
    }
  }
}

TEST_CASE("table shape and closure errors") {
  Lattice L = builtin("L1");
  Carrier below(L, L.interval(L.bottom(), L.at("e")));
  CHECK_THROWS_AS(OpTable(below, std::vector<ElementId>(4)), Error);
  try {
    OpTable(below, [&](ElementId, ElementId) { return L.top(); });
    FAIL("expected CarrierNotClosed");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::CarrierNotClosed);
  }
  // {e, c} in the diamond has no greatest element.
  Lattice M = builtin("M2");
  Carrier atoms(M, ElementSet::where(M.size(), [&](ElementId x) { return x == M.at("e") || x == M.at("c"); }));
  try {
    canonical_op(CanonicalKind::MeetTnorm, atoms);
    FAIL("expected CarrierNotClosed");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::CarrierNotClosed);
  }
}

TEST_CASE("restriction") {
  Lattice L = builtin("L1");
  OpTable J = canonical_op(CanonicalKind::JoinSubconorm, Carrier(L));
  ElementSet above = L.interval(L.at("e"), L.top());
  OpTable R = J.restrict_to(above);
  CHECK(R == canonical_op(CanonicalKind::JoinTconorm, Carrier(L, above)));
  try {
    R.restrict_to(L.all());
    FAIL("expected CarrierMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::CarrierMismatch);
  }
}
