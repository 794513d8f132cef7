#include "unilat/lattice_gen.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace unilat {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

Lattice chain(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::UnknownName, "a chain needs at least two elements");
  if (k > 0xFFFF) throw Error(ErrorCode::SizeTooLarge, "chain too long");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < k; ++i) labels.push_back("c" + std::to_string(i));
  labels.push_back("1");
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return Lattice::build(std::move(labels), covers);
}

std::optional<std::size_t> chain_length(std::string_view name) {
  std::string_view digits;
  if (name.starts_with("chain_n(") && name.ends_with(")")) {
    digits = name.substr(8, name.size() - 9);
  } else if (name.starts_with("chain")) {
    digits = name.substr(5);
  } else {
    return std::nullopt;
  }
  if (digits.empty() || digits.size() > 5 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  return std::stoul(std::string(digits));
}

std::vector<std::pair<std::size_t, std::size_t>> relation_covers(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& inner) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  if (n == 2) covers.emplace_back(0, 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, n - 1);
  }
  for (auto [a, b] : inner) covers.emplace_back(a + 1, b + 1);
  return covers;
}

std::vector<std::string> enumeration_labels(std::size_t n) {
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  labels.push_back("1");
  return labels;
}

bool bound_ok(OperatorKind kind, const Lattice& L, ElementId x, ElementId y, ElementId v) {
  switch (kind) {
    case OperatorKind::Tnorm:
    case OperatorKind::Tsubnorm: return L.leq(v, L.meet(x, y));
    case OperatorKind::Tconorm:
    case OperatorKind::Tsubconorm: return L.leq(L.join(x, y), v);
  }
  return false;
}

OpTable fallback_alternative(OperatorKind kind, const Carrier& c) {
  const Lattice& L = c.lattice();
  switch (kind) {
    case OperatorKind::Tnorm: return canonical_op(CanonicalKind::DrasticTnorm, c);
    case OperatorKind::Tconorm: return canonical_op(CanonicalKind::DrasticTconorm, c);
    case OperatorKind::Tsubnorm: {
      ElementId lo = c.minimum().value_or(L.bottom());
      return OpTable(c, [lo](ElementId, ElementId) { return lo; });
    }
    case OperatorKind::Tsubconorm: {
      ElementId hi = c.maximum().value_or(L.top());
      return OpTable(c, [hi](ElementId, ElementId) { return hi; });
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown operator kind");
}

OpTable canonical_for(OperatorKind kind, const Carrier& c) {
  switch (kind) {
    case OperatorKind::Tnorm: return canonical_op(CanonicalKind::MeetTnorm, c);
    case OperatorKind::Tconorm: return canonical_op(CanonicalKind::JoinTconorm, c);
    case OperatorKind::Tsubnorm: return canonical_op(CanonicalKind::MeetSubnorm, c);
    case OperatorKind::Tsubconorm: return canonical_op(CanonicalKind::JoinSubconorm, c);
  }
  throw Error(ErrorCode::UnknownName, "unknown operator kind");
}

}  // namespace

std::vector<std::string_view> builtin_names() {
  return {"L1", "L2", "M2", "N5", "probe_P", "probe_Q", "chain_n(k)"};
}

Lattice builtin(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "l1") {
    return Lattice::build({"0", "a", "e", "c", "f", "g", "1"},
                          Covers{{"0", "a"}, {"a", "e"}, {"a", "c"}, {"a", "f"},
                                 {"e", "g"}, {"c", "g"}, {"f", "g"}, {"g", "1"}});
  }
  if (lower == "l2") {
    return Lattice::build({"0", "a", "e", "c", "d", "f", "g", "1"},
                          Covers{{"0", "a"}, {"a", "e"}, {"a", "c"}, {"a", "f"}, {"e", "g"},
                                 {"c", "d"}, {"d", "g"}, {"f", "g"}, {"g", "1"}});
  }
  if (lower == "m2") {
    return Lattice::build({"0", "e", "c", "1"}, Covers{{"0", "e"}, {"0", "c"}, {"e", "1"}, {"c", "1"}});
  }
  if (lower == "n5") {
    return Lattice::build({"0", "a", "b", "c", "1"},
                          Covers{{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  }
  if (lower == "probe_p") {
    return Lattice::build({"0", "e", "s", "c", "1"},
                          Covers{{"0", "e"}, {"e", "s"}, {"s", "1"}, {"0", "c"}, {"c", "1"}});
  }
  if (lower == "probe_q") {
    return Lattice::build({"0", "s", "e", "c", "1"},
                          Covers{{"0", "s"}, {"s", "e"}, {"e", "1"}, {"0", "c"}, {"c", "1"}});
  }
  if (auto k = chain_length(lower)) return chain(*k);
  throw Error(ErrorCode::UnknownName, "unknown builtin lattice '" + std::string(name) + "'");
}

Lattice random_lattice(const GenConfig& cfg) {
  if (cfg.size < 2) throw Error(ErrorCode::SizeTooLarge, "a bounded lattice needs at least two elements");
  if (cfg.size > 64) throw Error(ErrorCode::SizeTooLarge, "random lattices are limited to 64 elements");
  const std::size_t n = cfg.size;
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("1");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const double p = density(rng);
    std::vector<std::pair<std::size_t, std::size_t>> inner;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      for (std::size_t j = i + 1; j + 2 < n; ++j) {
        if (coin(rng) < p) inner.emplace_back(i, j);
      }
    }
    if (auto l = Lattice::try_build(labels, relation_covers(n, inner))) return *l;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no lattice found after " + std::to_string(cfg.max_retries) + " attempts");
}

std::vector<Lattice> enumerate_lattices(std::size_t n) {
  if (n < 2 || n > kMaxEnumeratedLatticeSize) {
    throw Error(ErrorCode::SizeTooLarge,
                "lattice enumeration supports 2 to " + std::to_string(kMaxEnumeratedLatticeSize) + " elements");
  }
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
  }
  auto slot_index = [&](std::size_t i, std::size_t j) {
    return std::find(slots.begin(), slots.end(), std::pair{i, j}) - slots.begin();
  };

  std::map<std::uint32_t, Lattice> found;
  std::vector<std::size_t> perm(m);
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    auto rel = [&](std::size_t i, std::size_t j) { return i < j && ((mask >> slot_index(i, j)) & 1u); };
    bool transitive = true;
    for (std::size_t i = 0; i < m && transitive; ++i) {
      for (std::size_t j = 0; j < m && transitive; ++j) {
        for (std::size_t k = 0; k < m && transitive; ++k) {
          if (rel(i, j) && rel(j, k) && !rel(i, k)) transitive = false;
        }
      }
    }
    if (!transitive) continue;

    std::vector<std::pair<std::size_t, std::size_t>> inner;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1u) inner.push_back(slots[s]);
    }
    if (!Lattice::try_build(enumeration_labels(n), relation_covers(n, inner))) {
      continue;
    }

    // Canonical form: smallest mask over relabelings that keep the order a
    // linear extension of the index order.
    std::uint32_t best = mask;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint32_t relabeled = 0;
      bool ok = true;
      for (auto [a, b] : inner) {
        if (perm[a] > perm[b]) {
          ok = false;
          break;
        }
        relabeled |= 1u << slot_index(perm[a], perm[b]);
      }
      if (ok) best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found.count(best)) continue;

    std::vector<std::pair<std::size_t, std::size_t>> canon;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((best >> s) & 1u) canon.push_back(slots[s]);
    }
    found.emplace(best, Lattice::build(enumeration_labels(n), relation_covers(n, canon)));
  }

  std::vector<Lattice> out;
  for (auto& [mask, l] : found) out.push_back(l);
  return out;
}

std::vector<OpTable> enumerate_operators(OperatorKind kind, const Carrier& carrier, std::size_t cap) {
  const std::size_t k = carrier.size();
  if (k > kMaxEnumeratedCarrier) {
    throw Error(ErrorCode::CarrierTooLarge, "operator enumeration supports carriers of at most " +
                                                std::to_string(kMaxEnumeratedCarrier) + " elements");
  }
  const Lattice& L = carrier.lattice();
  const auto& m = carrier.members();
  std::vector<OpTable> out;
  if (k == 0 || cap == 0) return out;

  std::optional<std::size_t> neutral;
  if (kind == OperatorKind::Tnorm || kind == OperatorKind::Tconorm) {
    auto n = kind == OperatorKind::Tnorm ? carrier.maximum() : carrier.minimum();
    if (!n) return out;
    neutral = m.position(*n);
  }

  std::vector<int> cell(k * k, -1);
  auto at = [&](std::size_t i, std::size_t j) -> int& { return cell[i * k + j]; };
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      if (neutral && (i == *neutral || j == *neutral)) {
        at(i, j) = static_cast<int>(i == *neutral ? j : i);
        at(j, i) = at(i, j);
      } else {
        order.emplace_back(i, j);
      }
    }
  }

  // First-argument monotonicity of column j against every assigned cell;
  // commutativity gives the second argument.
  auto column_ok = [&](std::size_t i, std::size_t j) {
    const ElementId v = m[static_cast<std::size_t>(at(i, j))];
    for (std::size_t r = 0; r < k; ++r) {
      if (r == i || at(r, j) < 0) continue;
      const ElementId w = m[static_cast<std::size_t>(at(r, j))];
      if (L.leq(m[r], m[i]) && !L.leq(w, v)) return false;
      if (L.leq(m[i], m[r]) && !L.leq(v, w)) return false;
    }
    return true;
  };

  auto emit = [&] {
    std::vector<ElementId> cells(k * k);
    for (std::size_t c = 0; c < k * k; ++c) cells[c] = m[static_cast<std::size_t>(cell[c])];
    OpTable op(carrier, std::move(cells));
    if (is_kind(op, kind)) out.push_back(std::move(op));
  };

  auto search = [&](auto&& self, std::size_t pos) -> void {
    if (out.size() >= cap) return;
    if (pos == order.size()) {
      emit();
      return;
    }
    auto [i, j] = order[pos];
    for (std::size_t v = 0; v < k && out.size() < cap; ++v) {
      if (!bound_ok(kind, L, m[i], m[j], m[v])) continue;
      at(i, j) = at(j, i) = static_cast<int>(v);
      if (column_ok(i, j) && column_ok(j, i)) self(self, pos + 1);
      at(i, j) = at(j, i) = -1;
    }
  };
  search(search, 0);
  return out;
}

std::vector<Components> component_stream(MethodId method, const Lattice& L, ElementId e,
                                         const std::vector<ElementId>& chain, std::size_t cap) {
  const auto slots = component_slots(method, L, e, chain);
  std::vector<std::vector<OpTable>> options;
  for (const auto& s : slots) {
    Carrier c(L, s.carrier);
    if (c.size() <= kMaxEnumeratedCarrier) {
      options.push_back(enumerate_operators(s.kind, c, cap));
    } else {
      options.push_back({canonical_for(s.kind, c), fallback_alternative(s.kind, c)});
    }
  }

  std::vector<Components> out;
  std::vector<std::size_t> pick(slots.size(), 0);
  for (const auto& o : options) {
    if (o.empty()) return out;
  }
  while (out.size() < cap) {
    Components comps;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const OpTable& op = options[s][pick[s]];
      switch (slots[s].slot) {
        case ComponentSlot::Tnorm: comps.tnorm.emplace(op); break;
        case ComponentSlot::Tconorm: comps.tconorm.emplace(op); break;
        case ComponentSlot::Subnorm: comps.subnorm.emplace(op); break;
        case ComponentSlot::Subconorm: comps.subconorm.emplace(op); break;
        case ComponentSlot::ChainOp: comps.chain_ops.push_back(op); break;
      }
    }
    out.push_back(std::move(comps));
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++pick[s] < options[s].size()) break;
      pick[s] = 0;
      if (s == 0) return out;
    }
    if (slots.empty()) return out;
  }
  return out;
}

}  // namespace unilat
