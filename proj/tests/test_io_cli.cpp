#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"
#include "unilat/cli.hpp"
#include "unilat/io.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

const std::string kData = UNILAT_DATA_DIR;

ErrorCode code_of(const std::function<void()>& fn, int* line = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "unilat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  fs::path p = fs::temp_directory_path() / "unilat_io_cli_test";
  fs::create_directories(p);
  return p;
}

// Edge count of a DOT text, counted independently of the emitter.
std::size_t dot_edges(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++n;
  return n;
}

}  // namespace

TEST_CASE("data files parse to the expected lattices") {
  Lattice L1 = load_lattice(read_file(kData + "/L1.lat"));
  CHECK(L1.size() == 7);
  CHECK(L1.cover_pairs().size() == 8);
  CHECK(L1.same_as(builtin("L1")));
  CHECK(load_lattice(read_file(kData + "/L2.lat")).same_as(builtin("L2")));
  CHECK(load_lattice(read_file(kData + "/probe.lat")).same_as(builtin("probe_P")));
  CHECK(load_lattice(read_file(kData + "/chain2.lat")).size() == 2);
}

TEST_CASE("lattice file errors carry line numbers") {
  int line = 0;
  CHECK(code_of([] { parse_lattice_file("elements: 0 a 1\ncovers:\n0 a\na q\n"); }, &line) == ErrorCode::UnknownLabel);
  CHECK(line == 4);
  CHECK(code_of([] { parse_lattice_file("# hi\nelements: 0 0 1\n"); }, &line) == ErrorCode::DuplicateLabel);
  CHECK(line == 2);
  CHECK(code_of([] { parse_lattice_file("elements: 0 1\nfoo: x\n"); }, &line) == ErrorCode::SyntaxError);
  CHECK(line == 2);
  CHECK(code_of([] { parse_lattice_file("elements: 0 1\ncovers:\n0\n"); }, &line) == ErrorCode::SyntaxError);
  CHECK(line == 3);
  CHECK(code_of([] { load_lattice("elements: 0 a 1\nbottom: a\ncovers:\n0 a\na 1\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { load_lattice("elements: 0 a b 1\ncovers:\n0 a\n0 b\n"); }) == ErrorCode::NoBounds);
  CHECK(code_of([] { read_file("/nonexistent/unilat/file.lat"); }) == ErrorCode::IoError);

  LatticeFile f = parse_lattice_file("elements: 0 a 1 # trailing\nbottom: 0\ntop: 1\ncovers:\n0 a\na 1\n");
  CHECK(f.labels == std::vector<std::string>{"0", "a", "1"});
  CHECK(f.covers.size() == 2);
  CHECK(f.bottom == "0");
  CHECK(f.top == "1");
}

TEST_CASE("lattice files round-trip over the corpus") {
  for (const Lattice& L : corpus()) {
    std::string text = emit_lattice(L);
    Lattice back = load_lattice(text);
    CHECK(back.same_as(L));
    CHECK(emit_lattice(back) == text);
  }
}

TEST_CASE("table emission") {
  Lattice L = builtin("L1");
  OpTable U = construct({L, L.at("e"), MethodId::U1, canonical_components(MethodId::U1, L, L.at("e")), {}, true});
  std::string expected = "0\ta\te\tc\tf\tg\t1\n";
  const char* rows[] = {"0", "a", "e", "c", "f", "g", "1"};
  const auto grid = grid_of(golden_tables()[0].rows);
  for (std::size_t i = 0; i < 7; ++i) {
    std::string row = rows[i];
    for (const auto& v : grid[i]) row += "\t" + v;
    expected += row + "\n";
  }
  CHECK(emit_table(U) == expected);

  Lattice c2 = builtin("chain2");
  OpTable T = canonical_op(CanonicalKind::MeetTnorm, Carrier(c2));
  CHECK(emit_table(T) == "0\t1\n0\t0\t0\n1\t0\t1\n");
  CHECK(parse_table("\t0\t1\n0\t0\t0\n1\t0\t1\n", c2) == T);
}

TEST_CASE("table parse errors") {
  Lattice c2 = builtin("chain2");
  CHECK(code_of([&] { parse_table("0\t1\n0\t0\n1\t0\t1\n", c2); }) == ErrorCode::ShapeError);
  CHECK(code_of([&] { parse_table("0\t1\n0\t0\t0\n", c2); }) == ErrorCode::ShapeError);
  CHECK(code_of([&] { parse_table("0\t1\n0\t0\tq\n1\t0\t1\n", c2); }) == ErrorCode::UnknownLabel);
  CHECK(code_of([&] { parse_table("0\t1\n1\t0\t0\n0\t0\t1\n", c2); }) == ErrorCode::ShapeError);
}

TEST_CASE("table files round-trip over the corpus") {
  for (const Lattice& L : corpus()) {
    for (ElementId e : inner_elements(L)) {
      for (MethodId m : {MethodId::U1, MethodId::U4, MethodId::UR, MethodId::Ujoin, MethodId::Uc}) {
        OpTable U = construct({L, e, m, canonical_components(m, L, e), {}, true});
        std::string text = emit_table(U);
        OpTable back = parse_table(text, L);
        CHECK(back == U);
        CHECK(emit_table(back) == text);
      }
    }
    OpTable T = canonical_op(CanonicalKind::MeetTnorm, Carrier(L, L.interval(L.bottom(), inner_elements(L)[0])));
    CHECK(parse_table(emit_table(T), L) == T);
  }
}

TEST_CASE("DOT edges match the transitive reduction") {
  CHECK(dot_edges(emit_dot(builtin("L1"))) == 8);
  CHECK(dot_edges(emit_dot(builtin("L2"))) == 9);
  CHECK(dot_edges(emit_dot(builtin("chain2"))) == 1);
  for (const Lattice& L : corpus()) {
    CHECK(static_cast<int>(dot_edges(emit_dot(L))) == oracle::cover_count(to_poset(L)));
  }
  std::string dot = emit_dot(builtin("chain2"), "c");
  CHECK(dot == "digraph \"c\" {\n  rankdir=BT;\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n");
}

TEST_CASE("cli check and dot") {
  Run r = run({"check", "--lattice", kData + "/chain2.lat"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 elements") != std::string::npos);
  r = run({"check", "--lattice", "builtin:L1"});
  CHECK(r.code == 0);
  CHECK(r.out == "7 elements, bottom 0, top 1, 8 covers\n");
  r = run({"dot", "--lattice", "builtin:L2"});
  CHECK(r.code == 0);
  CHECK(dot_edges(r.out) == 9);
}

TEST_CASE("cli construct then verify") {
  fs::path dir = scratch_dir();
  std::string table = (dir / "u1.tsv").string();
  Run r = run({"construct", "--lattice", "builtin:L1", "--e", "e", "--method", "u1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("C1") != std::string::npos);
  CHECK(r.err.find("PreconditionViolated") != std::string::npos);

  r = run({"construct", "--lattice", "builtin:L1", "--e", "e", "--method", "u1", "--force", "--out", table});
  CHECK(r.code == 0);
  r = run({"verify", "--lattice", "builtin:L1", "--e", "e", "--table", table});
  CHECK(r.code == 1);
  CHECK(r.out.find("associative: violated") != std::string::npos);
  CHECK(r.out.find("not a uninorm") != std::string::npos);

  r = run({"construct", "--lattice", kData + "/probe.lat", "--e", "e", "--method", "u1", "--out", table});
  CHECK(r.code == 0);
  r = run({"verify", "--lattice", kData + "/probe.lat", "--e", "e", "--table", table});
  CHECK(r.code == 0);
  CHECK(r.out.find("uninorm\n") != std::string::npos);

  r = run({"construct", "--lattice", "builtin:chain4", "--e", "c1", "--method", "iters", "--chain", "0", "c1", "c2",
           "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0\tc1\tc2\t1\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("cli conditions, regions and audit") {
  Run r = run({"conditions", "--lattice", "builtin:L1", "--e", "e", "--method", "u1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("C1 (hypothesis) fails at (c,g)") != std::string::npos);
  r = run({"conditions", "--lattice", "builtin:probe_P", "--e", "e", "--method", "u1", "--tconorm", "drastic"});
  CHECK(r.code == 1);
  CHECK(r.out.find("fails at (s,s)") != std::string::npos);

  r = run({"regions", "--lattice", "builtin:L1", "--e", "e"});
  CHECK(r.code == 0);
  CHECK(r.out.find("I_e = {c,f}") != std::string::npos);

  r = run({"audit", "--lattice", kData + "/probe.lat", "--e", "e", "--method", "u1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("iff respected over 2 component cases") != std::string::npos);
  r = run({"audit", "--lattice", "builtin:L1", "--e", "e", "--method", "u1"});
  CHECK(r.out.find("no admissible component cases") != std::string::npos);
}

TEST_CASE("cli gen") {
  Run a = run({"gen", "--size", "7", "--seed", "3"});
  Run b = run({"gen", "--size", "7", "--seed", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(load_lattice(a.out).same_as(random_lattice({7, 3})));

  fs::path dir = scratch_dir() / "enum";
  Run e = run({"gen", "--enumerate", "5", "--out-dir", dir.string()});
  CHECK(e.code == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(load_lattice(read_file(entry.path().string())).size() == 5);
    ++files;
  }
  CHECK(files == 5);
  fs::remove_all(dir);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--lattice", "builtin:nope"}).code == 2);
  CHECK(run({"check", "--lattice", "/nonexistent.lat"}).code == 2);
  CHECK(run({"construct", "--lattice", "builtin:L1", "--e", "0", "--method", "u1"}).code == 2);
  CHECK(run({"construct", "--lattice", "builtin:L1", "--e", "e", "--method", "u9"}).code == 2);
  CHECK(run({"construct", "--lattice", "builtin:L1", "--e", "e", "--method", "u1", "--tnorm", "bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
