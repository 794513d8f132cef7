#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "unilat/constructions.hpp"

namespace unilat {

/// Named lattices: L1, L2, M2, N5, probe_P, probe_Q and chain_n(k) (also
/// accepted as chainK). Throws UnknownName.
Lattice builtin(std::string_view name);

std::vector<std::string_view> builtin_names();

struct GenConfig {
  std::size_t size = 5;
  std::uint64_t seed = 0;
  std::size_t max_retries = 100000;
};

/// Seeded rejection sampling over random cover sets among the inner
/// elements. Labels are 0, x1, ..., x(n-2), 1. Throws RetriesExhausted.
Lattice random_lattice(const GenConfig& cfg);

inline constexpr std::size_t kMaxEnumeratedLatticeSize = 6;

/// Every bounded lattice on n elements, one per isomorphism class. Element 0
/// is the bottom, n-1 the top, inner elements are labelled a, b, c, d in a
/// linear extension of the order. Throws SizeTooLarge above
/// kMaxEnumeratedLatticeSize.
std::vector<Lattice> enumerate_lattices(std::size_t n);

inline constexpr std::size_t kMaxEnumeratedCarrier = 5;

/// All operators of the given kind on the carrier, up to `cap` of them, in
/// lexicographic table order. Throws CarrierTooLarge above
/// kMaxEnumeratedCarrier.
std::vector<OpTable> enumerate_operators(OperatorKind kind, const Carrier& carrier, std::size_t cap = 10000);

/// Complete component sets for `method`: the cartesian product of the
/// enumerated operators of each slot, truncated to `cap`. Slots whose carrier
/// is too large to enumerate use the canonical operator and one alternative
/// (drastic for t-norms and t-conorms, the constant bound for sub-operators).
std::vector<Components> component_stream(MethodId method, const Lattice& L, ElementId e,
                                         const std::vector<ElementId>& chain = {}, std::size_t cap = 4096);

}  // namespace unilat
