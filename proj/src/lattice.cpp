#include "unilat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace unilat {

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; });
}

}  // namespace

std::variant<Lattice, Lattice::BuildFailure> Lattice::build_impl(
    std::vector<std::string> labels, const std::vector<IndexCover>& covers) {
  const std::size_t n = labels.size();
  if (n == 0) return BuildFailure{ErrorCode::NoBounds, "lattice has no elements", {}};
  if (n > 0xFFFF) return BuildFailure{ErrorCode::SizeTooLarge, "too many elements", {}};

  auto d = std::make_shared<Data>();
  d->n = n;
  d->labels = std::move(labels);
  d->leq.assign(n * n, 0);
  auto le = [&](std::size_t i, std::size_t j) -> std::uint8_t& { return d->leq[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) le(i, i) = 1;
  for (auto [lo, hi] : covers) {
    if (lo == hi) {
      return BuildFailure{ErrorCode::NotAPoset, "cover " + d->labels[lo] + " < " + d->labels[lo] + " is a cycle",
                          {ElementId(lo), ElementId(lo)}};
    }
    le(lo, hi) = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le(k, j)) le(i, j) = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (le(i, j) && le(j, i)) {
        return BuildFailure{ErrorCode::NotAPoset,
                            "cycle through " + d->labels[i] + " and " + d->labels[j],
                            {ElementId(i), ElementId(j)}};
      }
    }
  }

  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_bottom = true, is_top = true;
    for (std::size_t j = 0; j < n; ++j) {
      is_bottom = is_bottom && le(i, j);
      is_top = is_top && le(j, i);
    }
    if (is_bottom) bottom = i;
    if (is_top) top = i;
  }
  if (!bottom || !top) {
    return BuildFailure{ErrorCode::NoBounds, !bottom ? "no least element" : "no greatest element", {}};
  }
  d->bottom = ElementId(*bottom);
  d->top = ElementId(*top);

  d->meet.assign(n * n, ElementId{});
  d->join.assign(n * n, ElementId{});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t z = 0; z < n; ++z) {
        if (le(z, x) && le(z, y)) {
          bool greatest = true;
          for (std::size_t w = 0; w < n && greatest; ++w) {
            if (le(w, x) && le(w, y) && !le(w, z)) greatest = false;
          }
          if (greatest) glb = z;
        }
        if (le(x, z) && le(y, z)) {
          bool least = true;
          for (std::size_t w = 0; w < n && least; ++w) {
            if (le(x, w) && le(y, w) && !le(z, w)) least = false;
          }
          if (least) lub = z;
        }
      }
      if (!glb || !lub) {
        return BuildFailure{ErrorCode::NotALattice,
                            std::string("pair (") + d->labels[x] + "," + d->labels[y] + ") has no " +
                                (!lub ? "least upper bound" : "greatest lower bound"),
                            {ElementId(x), ElementId(y)}};
      }
      d->meet[x * n + y] = d->meet[y * n + x] = ElementId(*glb);
      d->join[x * n + y] = d->join[y * n + x] = ElementId(*lub);
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z) {
        if (z != x && z != y && le(x, z) && le(z, y)) cover = false;
      }
      if (cover) d->covers.push_back({ElementId(x), ElementId(y)});
    }
  }
  return Lattice(std::move(d));
}

Lattice Lattice::build(std::vector<std::string> labels, const std::vector<IndexCover>& covers) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!valid_label(labels[i])) {
      throw Error(ErrorCode::InvalidLabel, "label '" + labels[i] + "' is empty or contains whitespace");
    }
    if (!seen.emplace(labels[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    }
  }
  for (auto [lo, hi] : covers) {
    if (lo >= labels.size() || hi >= labels.size()) {
      throw Error(ErrorCode::UnknownLabel, "cover refers to an element index out of range");
    }
  }
  auto result = build_impl(std::move(labels), covers);
  if (auto* f = std::get_if<BuildFailure>(&result)) {
    throw Error(f->code, f->message, f->witness);
  }
  return std::get<Lattice>(std::move(result));
}

Lattice Lattice::build(std::vector<std::string> labels, const std::vector<LabelCover>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<IndexCover> idx;
  idx.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorCode::UnknownLabel,
                  "cover '" + lo + " " + hi + "' names unknown label '" + (a == index.end() ? lo : hi) + "'");
    }
    idx.emplace_back(a->second, b->second);
  }
  return build(std::move(labels), idx);
}

std::optional<Lattice> Lattice::try_build(std::vector<std::string> labels,
                                          const std::vector<IndexCover>& covers) {
  auto result = build_impl(std::move(labels), covers);
  if (auto* l = std::get_if<Lattice>(&result)) return std::move(*l);
  return std::nullopt;
}

std::vector<ElementId> Lattice::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

std::optional<ElementId> Lattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (d_->labels[i] == label) return ElementId(i);
  }
  return std::nullopt;
}

ElementId Lattice::at(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorCode::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

ElementSet Lattice::interval(ElementId a, ElementId b, bool left_open, bool right_open) const {
  if (!leq(a, b)) {
    throw Error(ErrorCode::EmptyBounds, "interval bounds " + label(a) + " and " + label(b) + " are not ordered",
                {a, b});
  }
  return ElementSet::where(size(), [&](ElementId x) {
    if (!leq(a, x) || !leq(x, b)) return false;
    if (left_open && x == a) return false;
    if (right_open && x == b) return false;
    return true;
  });
}

ElementSet Lattice::incomparable_with(ElementId e) const {
  return ElementSet::where(size(), [&](ElementId x) { return incomparable(x, e); });
}

bool Lattice::same_as(const Lattice& other) const {
  if (d_ == other.d_) return true;
  return d_->labels == other.d_->labels && d_->leq == other.d_->leq;
}

RegionSets regions(const Lattice& L, ElementId e) {
  const ElementId zero = L.bottom();
  const ElementId one = L.top();
  const std::size_t n = L.size();

  ElementSet I = L.incomparable_with(e);
  ElementSet O = ElementSet::where(n, [&](ElementId x) { return x == one; });
  ElementSet Z = ElementSet::where(n, [&](ElementId x) { return x == zero; });
  ElementSet E = ElementSet::where(n, [&](ElementId x) { return x == e; });
  ElementSet below = L.interval(zero, e);                // [0,e]
  ElementSet below_open = L.interval(zero, e, true, true);  // ]0,e[
  ElementSet above = L.interval(e, one);                 // [e,1]
  ElementSet above_open = L.interval(e, one, true, true);   // ]e,1[
  ElementSet above_lopen = L.interval(e, one, true, false);  // ]e,1]
  ElementSet below_ropen = L.interval(zero, e, false, true);  // [0,e[

  RegionSets r;
  r.e = e;
  r.I_e = I;
  r.D_e = symmetric_rect(I, O) | symmetric_rect(below, O) | symmetric_rect(above, E);
  r.D_e_prime = symmetric_rect(I, O) | symmetric_rect(below_open, O) | symmetric_rect(above_lopen, E);
  r.E_e = symmetric_rect(I, Z) | symmetric_rect(above, Z) | symmetric_rect(below, E);
  r.E_e_prime = symmetric_rect(I, Z) | symmetric_rect(above_open, Z) | symmetric_rect(below_ropen, E);
  return r;
}

}  // namespace unilat
