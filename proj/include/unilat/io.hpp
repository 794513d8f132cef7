#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unilat/op_table.hpp"

namespace unilat {

/// Tokens of a lattice file, before any order-theoretic validation.
struct LatticeFile {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::string> bottom;
  std::optional<std::string> top;
};

/// Line-oriented format:
///   # comment
///   elements: 0 a e 1
///   bottom: 0        (optional)
///   top: 1           (optional)
///   covers:
///   0 a
///   a e
/// Throws SyntaxError or UnknownLabel carrying the 1-based line number.
LatticeFile parse_lattice_file(std::string_view text);

/// parse_lattice_file followed by build; declared bounds must match the
/// inferred ones.
Lattice load_lattice(std::string_view text);

std::string emit_lattice(const Lattice& L);

/// Tab-separated grid: a header of carrier labels, then one row per carrier
/// element (row label followed by the values). Elements are in lattice index
/// order.
std::string emit_table(const OpTable& op);

/// Reads a grid written by emit_table (a leading empty corner cell in the
/// header is accepted). Throws ShapeError, UnknownLabel or SyntaxError.
OpTable parse_table(std::string_view text, const Lattice& L);

/// Hasse diagram as a digraph with one edge per cover, bottom to top.
std::string emit_dot(const Lattice& L, std::string_view name = "lattice");

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace unilat
