#include "unilat/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace unilat {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

Error at_line(ErrorCode code, std::size_t line, const std::string& msg) {
  return Error(code, "line " + std::to_string(line) + ": " + msg, {}, static_cast<int>(line));
}

}  // namespace

LatticeFile parse_lattice_file(std::string_view text) {
  LatticeFile f;
  bool have_elements = false;
  bool in_covers = false;
  std::unordered_map<std::string, std::size_t> known;
  const auto lines = lines_of(text);
  for (std::size_t no = 1; no <= lines.size(); ++no) {
    std::string_view line = lines[no - 1];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      const std::string_view key = strip(line.substr(0, colon));
      const auto values = split_ws(line.substr(colon + 1));
      if (key == "elements") {
        if (have_elements) throw at_line(ErrorCode::SyntaxError, no, "elements declared twice");
        for (const auto& v : values) {
          if (!known.emplace(v, f.labels.size()).second) {
            throw at_line(ErrorCode::DuplicateLabel, no, "label '" + v + "' appears twice");
          }
          f.labels.push_back(v);
        }
        have_elements = true;
        in_covers = false;
      } else if (key == "covers") {
        if (!values.empty()) throw at_line(ErrorCode::SyntaxError, no, "cover pairs go on the following lines");
        in_covers = true;
      } else if (key == "bottom" || key == "top") {
        if (values.size() != 1) throw at_line(ErrorCode::SyntaxError, no, std::string(key) + " takes one label");
        if (!known.count(values[0])) throw at_line(ErrorCode::UnknownLabel, no, "unknown label '" + values[0] + "'");
        (key == "bottom" ? f.bottom : f.top) = values[0];
        in_covers = false;
      } else {
        throw at_line(ErrorCode::SyntaxError, no, "unknown key '" + std::string(key) + "'");
      }
      continue;
    }

    if (!in_covers) throw at_line(ErrorCode::SyntaxError, no, "expected a 'key:' line");
    const auto pair = split_ws(line);
    if (pair.size() != 2) throw at_line(ErrorCode::SyntaxError, no, "a cover line needs exactly two labels");
    for (const auto& p : pair) {
      if (!known.count(p)) throw at_line(ErrorCode::UnknownLabel, no, "unknown label '" + p + "'");
    }
    f.covers.emplace_back(pair[0], pair[1]);
  }
  if (!have_elements) throw Error(ErrorCode::SyntaxError, "missing 'elements:' line");
  return f;
}

Lattice load_lattice(std::string_view text) {
  LatticeFile f = parse_lattice_file(text);
  Lattice L = Lattice::build(f.labels, f.covers);
  if (f.bottom && *f.bottom != L.label(L.bottom())) {
    throw Error(ErrorCode::SyntaxError,
                "declared bottom " + *f.bottom + " but the least element is " + L.label(L.bottom()));
  }
  if (f.top && *f.top != L.label(L.top())) {
    throw Error(ErrorCode::SyntaxError, "declared top " + *f.top + " but the greatest element is " + L.label(L.top()));
  }
  return L;
}

std::string emit_lattice(const Lattice& L) {
  std::string out = "elements:";
  for (const auto& l : L.labels()) out += " " + l;
  out += "\ncovers:\n";
  for (auto [x, y] : L.cover_pairs()) out += L.label(x) + " " + L.label(y) + "\n";
  return out;
}

std::string emit_table(const OpTable& op) {
  const Lattice& L = op.lattice();
  const auto& m = op.carrier().members();
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += '\t';
    out += L.label(m[i]);
  }
  out += '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += L.label(m[i]);
    for (std::size_t j = 0; j < m.size(); ++j) out += '\t' + L.label(op.at_local(i, j));
    out += '\n';
  }
  return out;
}

OpTable parse_table(std::string_view text, const Lattice& L) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  const auto lines = lines_of(text);
  for (std::size_t no = 1; no <= lines.size(); ++no) {
    std::string_view line = lines[no - 1];
    while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (strip(line).empty() || strip(line).front() == '#') continue;
    auto cells = split_tabs(line);
    for (auto& c : cells) c = std::string(strip(c));
    rows.emplace_back(no, std::move(cells));
  }
  if (rows.empty()) throw Error(ErrorCode::ShapeError, "empty table");

  auto header = rows.front().second;
  if (!header.empty() && header.front().empty()) header.erase(header.begin());
  const std::size_t k = header.size();
  if (rows.size() != k + 1) {
    throw Error(ErrorCode::ShapeError, "header names " + std::to_string(k) + " elements but the table has " +
                                           std::to_string(rows.size() - 1) + " rows");
  }
  auto lookup = [&](const std::string& label, std::size_t line) {
    if (auto x = L.find(label)) return *x;
    throw at_line(ErrorCode::UnknownLabel, line, "unknown label '" + label + "'");
  };

  ElementSet members(L.size());
  std::vector<ElementId> order;
  for (const auto& h : header) {
    ElementId x = lookup(h, rows.front().first);
    if (members.contains(x)) throw at_line(ErrorCode::ShapeError, rows.front().first, "label '" + h + "' repeated");
    members.insert(x);
    order.push_back(x);
  }
  std::vector<ElementId> cells(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& [line, row] = rows[r + 1];
    if (row.size() != k + 1) {
      throw at_line(ErrorCode::ShapeError, line, "expected " + std::to_string(k + 1) + " cells, found " +
                                                     std::to_string(row.size()));
    }
    if (lookup(row[0], line) != order[r]) {
      throw at_line(ErrorCode::ShapeError, line, "row label '" + row[0] + "' does not match header position");
    }
    const std::size_t i = members.position(order[r]);
    for (std::size_t c = 0; c < k; ++c) {
      cells[i * k + members.position(order[c])] = lookup(row[c + 1], line);
    }
  }
  return OpTable(Carrier(L, members), std::move(cells));
}

std::string emit_dot(const Lattice& L, std::string_view name) {
  std::string out = "digraph \"" + std::string(name) + "\" {\n  rankdir=BT;\n";
  for (const auto& l : L.labels()) out += "  \"" + l + "\";\n";
  for (auto [x, y] : L.cover_pairs()) out += "  \"" + L.label(x) + "\" -> \"" + L.label(y) + "\";\n";
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

}  // namespace unilat
