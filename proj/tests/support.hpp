#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "unilat/lattice_gen.hpp"
#include "unilat/verifier.hpp"

namespace testing {

using namespace unilat;

inline oracle::Poset to_poset(const Lattice& L) {
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : L.cover_pairs()) covers.emplace_back(static_cast<int>(x.index()), static_cast<int>(y.index()));
  return oracle::closure(static_cast<int>(L.size()), covers);
}

// Order of a lattice from its declared covers, computed by the oracle only.
inline oracle::Poset poset_from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers) {
  return oracle::closure(static_cast<int>(n), covers);
}

inline oracle::Op to_op(const OpTable& op) {
  const std::size_t n = op.lattice().size();
  oracle::Op o{oracle::Matrix(n, std::vector<int>(n, -1)), {}};
  for (ElementId x : op.carrier().members()) o.carrier.push_back(static_cast<int>(x.index()));
  for (ElementId x : op.carrier().members())
    for (ElementId y : op.carrier().members()) o.t[x.index()][y.index()] = static_cast<int>(op(x, y).index());
  return o;
}

inline std::vector<ElementId> ids(const Lattice& L, std::initializer_list<const char*> labels) {
  std::vector<ElementId> out;
  for (const char* l : labels) out.push_back(L.at(l));
  return out;
}

inline std::vector<std::string> labels_of(const Lattice& L, const std::vector<ElementId>& xs) {
  std::vector<std::string> out;
  for (ElementId x : xs) out.push_back(L.label(x));
  return out;
}

inline std::vector<std::string> labels_of(const Lattice& L, const ElementSet& xs) {
  std::vector<std::string> out;
  for (ElementId x : xs) out.push_back(L.label(x));
  return out;
}

// Reference tables of the six worked examples; rows and columns follow the
// listed element order.
struct Golden {
  const char* name;
  const char* lattice;
  MethodId method;
  std::vector<std::string> rows;
};

inline const std::vector<Golden>& golden_tables() {
  static const std::vector<Golden> g = {
      {"U1 on L1", "L1", MethodId::U1,
       {"0 0 0 c f 0 1", "0 a a c f a 1", "0 a e c f g 1", "c c c c g c 1", "f f f g f f 1", "0 a g c f g 1",
        "1 1 1 1 1 1 1"}},
      {"U2 on L1", "L1", MethodId::U2,
       {"0 0 0 0 0 0 0", "0 a a c f g 1", "0 a e c f g 1", "0 c c c a c c", "0 f f a f f f", "0 g g c f g 1",
        "0 1 1 c f 1 1"}},
      {"U3 on L1", "L1", MethodId::U3,
       {"0 0 0 0 0 0 0", "0 a a c f a 1", "0 a e c f g 1", "0 c c c g c 1", "0 f f g f f 1", "0 a g c f g 1",
        "0 1 1 1 1 1 1"}},
      {"U4 on L1", "L1", MethodId::U4,
       {"0 0 0 0 0 0 1", "0 a a c f g 1", "0 a e c f g 1", "0 c c c a c 1", "0 f f a f f 1", "0 g g c f g 1",
        "1 1 1 1 1 1 1"}},
      {"U5 on L2", "L2", MethodId::U5,
       {"0 0 0 0 0 0 0 0", "0 a a a a a a a", "0 a e c d f g 1", "0 a c c d g 1 1", "0 a d d d g 1 1",
        "0 a f g g f 1 1", "0 a g 1 1 1 1 1", "0 a 1 1 1 1 1 1"}},
      {"U6 on L2", "L2", MethodId::U6,
       {"0 0 0 0 0 0 g 1", "0 0 a 0 0 0 g 1", "0 a e c d f g 1", "0 0 c c c a g 1", "0 0 d c d a g 1",
        "0 0 f a a f g 1", "g g g g g g g 1", "1 1 1 1 1 1 1 1"}},
  };
  return g;
}

inline std::vector<std::vector<std::string>> grid_of(const OpTable& op) {
  std::vector<std::vector<std::string>> out;
  for (ElementId x : op.carrier().members()) {
    std::vector<std::string> row;
    for (ElementId y : op.carrier().members()) row.push_back(op.lattice().label(op(x, y)));
    out.push_back(row);
  }
  return out;
}

inline std::vector<std::vector<std::string>> grid_of(const std::vector<std::string>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    std::istringstream in(r);
    std::vector<std::string> row;
    for (std::string t; in >> t;) row.push_back(t);
    out.push_back(row);
  }
  return out;
}

// Enumerated lattices of 3..6 elements plus the two seven/eight-element
// examples and a few seeded random lattices of size 7 and 8.
inline const std::vector<Lattice>& corpus() {
  static const std::vector<Lattice> c = [] {
    std::vector<Lattice> out;
    for (std::size_t n = 3; n <= kMaxEnumeratedLatticeSize; ++n)
      for (auto& l : enumerate_lattices(n)) out.push_back(l);
    out.push_back(builtin("L1"));
    out.push_back(builtin("L2"));
    out.push_back(builtin("probe_P"));
    out.push_back(builtin("probe_Q"));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) out.push_back(random_lattice({7 + seed % 2, seed}));
    return out;
  }();
  return c;
}

inline std::vector<ElementId> inner_elements(const Lattice& L) {
  std::vector<ElementId> out;
  for (ElementId x : L.all())
    if (x != L.bottom() && x != L.top()) out.push_back(x);
  return out;
}

// Every strictly monotone chain from `from` to `to` with between `min_len`
// and `max_len` elements.
inline std::vector<std::vector<ElementId>> chains_between(const Lattice& L, ElementId from, ElementId to,
                                                          std::size_t min_len, std::size_t max_len) {
  std::vector<std::vector<ElementId>> out;
  const bool up = L.leq(from, to);
  std::vector<ElementId> cur{from};
  auto rec = [&](auto&& self) -> void {
    if (cur.back() == to) {
      if (cur.size() >= min_len) out.push_back(cur);
      return;
    }
    if (cur.size() >= max_len) return;
    for (ElementId x : L.all()) {
      if (up ? !L.lt(cur.back(), x) : !L.lt(x, cur.back())) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace testing
