#include "unilat/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "unilat/io.hpp"
#include "unilat/lattice_gen.hpp"
#include "unilat/verifier.hpp"

namespace unilat {

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

Lattice open_lattice(const std::string& where) {
  if (where.starts_with("builtin:")) return builtin(where.substr(8));
  return load_lattice(read_file(where));
}

std::string fmt_set(const Lattice& L, const ElementSet& s) {
  std::string out = "{";
  for (ElementId x : s) out += (out.size() > 1 ? "," : "") + L.label(x);
  return out + "}";
}

std::string fmt_pairs(const Lattice& L, const PairSet& s) {
  std::string out = "{";
  for (auto [x, y] : s.pairs()) out += (out.size() > 1 ? " (" : "(") + L.label(x) + "," + L.label(y) + ")";
  return out + "}";
}

std::string fmt_tuple(const Lattice& L, const std::vector<ElementId>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + L.label(xs[i]);
  return out + ")";
}

/// Component given on the command line: min, max, drastic or file:PATH.
OpTable component_from(const std::string& spec, const Lattice& L, const SlotRequirement& slot) {
  Carrier c(L, slot.carrier);
  const bool norm_like = slot.kind == OperatorKind::Tnorm || slot.kind == OperatorKind::Tsubnorm;
  const bool sub = slot.kind == OperatorKind::Tsubnorm || slot.kind == OperatorKind::Tsubconorm;
  if (spec == "min") return canonical_op(sub ? CanonicalKind::MeetSubnorm : CanonicalKind::MeetTnorm, c);
  if (spec == "max") return canonical_op(sub ? CanonicalKind::JoinSubconorm : CanonicalKind::JoinTconorm, c);
  if (spec == "drastic") {
    if (sub) throw Error(ErrorCode::UnknownName, "drastic is only defined for t-norms and t-conorms");
    return canonical_op(norm_like ? CanonicalKind::DrasticTnorm : CanonicalKind::DrasticTconorm, c);
  }
  if (spec.starts_with("file:")) return parse_table(read_file(spec.substr(5)), L);
  throw Error(ErrorCode::UnknownName, "component must be min, max, drastic or file:PATH, got '" + spec + "'");
}

struct ComponentArgs {
  std::string tnorm, tconorm, subnorm, subconorm;
  std::vector<std::string> blocks;
  std::vector<std::string> chain;
};

void add_component_options(CLI::App* cmd, ComponentArgs& a) {
  cmd->add_option("--tnorm", a.tnorm, "t-norm on [0,e]: min|drastic|file:PATH (default min)");
  cmd->add_option("--tconorm", a.tconorm, "t-conorm on [e,1]: max|drastic|file:PATH (default max)");
  cmd->add_option("--subnorm", a.subnorm, "t-subnorm: min|file:PATH (default min)");
  cmd->add_option("--subconorm", a.subconorm, "t-subconorm: max|file:PATH (default max)");
  cmd->add_option("--block", a.blocks, "block operators of an iterative method, in chain order");
  cmd->add_option("--chain", a.chain, "chain for iterative methods, e.g. --chain 0 e b 1");
}

std::vector<ElementId> chain_from(const Lattice& L, const std::vector<std::string>& labels) {
  std::vector<ElementId> out;
  for (const auto& l : labels) out.push_back(L.at(l));
  return out;
}

Components components_from(const ComponentArgs& a, MethodId method, const Lattice& L, ElementId e,
                           const std::vector<ElementId>& chain) {
  Components c;
  for (const auto& slot : component_slots(method, L, e, chain)) {
    auto pick = [](const std::string& given, const char* fallback) { return given.empty() ? fallback : given; };
    switch (slot.slot) {
      case ComponentSlot::Tnorm: c.tnorm.emplace(component_from(pick(a.tnorm, "min"), L, slot)); break;
      case ComponentSlot::Tconorm: c.tconorm.emplace(component_from(pick(a.tconorm, "max"), L, slot)); break;
      case ComponentSlot::Subnorm: c.subnorm.emplace(component_from(pick(a.subnorm, "min"), L, slot)); break;
      case ComponentSlot::Subconorm:
        c.subconorm.emplace(component_from(pick(a.subconorm, "max"), L, slot));
        break;
      case ComponentSlot::ChainOp: {
        const char* fallback = slot.kind == OperatorKind::Tnorm ? "min" : "max";
        std::string given = slot.chain_index < a.blocks.size() ? a.blocks[slot.chain_index] : "";
        c.chain_ops.push_back(component_from(pick(given, fallback), L, slot));
        break;
      }
    }
  }
  return c;
}

void print_conditions(std::ostream& out, const Lattice& L, const ConditionReport& r) {
  if (r.entries.empty()) out << "no side conditions\n";
  for (const auto& c : r.entries) {
    out << to_string(c.id) << " (" << to_string(c.required_as) << ") " << (c.holds ? "holds" : "fails");
    if (c.witness) out << " at (" << L.label(c.witness->x) << "," << L.label(c.witness->y) << ")";
    out << ": " << describe(c.id) << "\n";
  }
}

void print_verification(std::ostream& out, const OpTable& op, const VerificationReport& r) {
  const Lattice& L = op.lattice();
  auto line = [&](const char* name, const AxiomResult& a) {
    out << name << ": " << (a.holds ? "ok" : "violated");
    if (!a.holds) out << " at " << fmt_tuple(L, a.witness);
    out << "\n";
  };
  line("commutative", r.commutative);
  line("associative", r.associative);
  if (!r.associative.holds) {
    auto w = evaluate_triple(op, r.associative.witness[0], r.associative.witness[1], r.associative.witness[2]);
    out << "  U(" << L.label(w.x) << ",U(" << L.label(w.y) << "," << L.label(w.z) << "))=" << L.label(w.left)
        << ", U(U(" << L.label(w.x) << "," << L.label(w.y) << ")," << L.label(w.z) << ")=" << L.label(w.right)
        << "\n";
  }
  line("monotone", r.monotone);
  line("neutral", r.neutral);
  out << (r.is_uninorm ? "uninorm\n" : "not a uninorm\n");
}

}  // namespace

int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Uninorm constructions on finite bounded lattices"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string lattice_arg, e_arg, method_arg, table_arg, out_arg;
  bool force = false;
  ComponentArgs comps;

  auto lattice_opt = [&](CLI::App* cmd) {
    cmd->add_option("--lattice", lattice_arg, "lattice file or builtin:NAME")->required();
  };
  auto e_opt = [&](CLI::App* cmd) { cmd->add_option("--e", e_arg, "neutral element label")->required(); };

  auto* check = app.add_subcommand("check", "validate a lattice and print its size and bounds");
  lattice_opt(check);

  auto* regions_cmd = app.add_subcommand("regions", "print I_e, D(e), D(e)', E(e), E(e)'");
  lattice_opt(regions_cmd);
  e_opt(regions_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "build a construction's table");
  lattice_opt(construct_cmd);
  e_opt(construct_cmd);
  construct_cmd->add_option("--method", method_arg, "method name, e.g. u1, ure, iters")->required();
  add_component_options(construct_cmd, comps);
  construct_cmd->add_flag("--force", force, "build even when side conditions fail");
  construct_cmd->add_option("--out", out_arg, "output table file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "check the uninorm axioms of a table");
  lattice_opt(verify_cmd);
  e_opt(verify_cmd);
  verify_cmd->add_option("--table", table_arg, "table file")->required();

  auto* conditions_cmd = app.add_subcommand("conditions", "evaluate a method's side conditions");
  lattice_opt(conditions_cmd);
  e_opt(conditions_cmd);
  conditions_cmd->add_option("--method", method_arg, "method name")->required();
  add_component_options(conditions_cmd, comps);

  std::size_t cap = 4096;
  auto* audit_cmd = app.add_subcommand("audit", "compare iff conditions with the uninorm check over enumerated components");
  lattice_opt(audit_cmd);
  e_opt(audit_cmd);
  audit_cmd->add_option("--method", method_arg, "method name")->required();
  audit_cmd->add_option("--chain", comps.chain, "chain for iterative methods");
  audit_cmd->add_option("--cap", cap, "maximum number of component sets");

  std::size_t gen_size = 5, enumerate_n = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  auto* gen_cmd = app.add_subcommand("gen", "emit a random lattice or all lattices of a size");
  gen_cmd->add_option("--size", gen_size, "element count for a random lattice");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--enumerate", enumerate_n, "emit every lattice with this many elements");
  gen_cmd->add_option("--out-dir", out_dir, "write one file per lattice into this directory");

  auto* dot_cmd = app.add_subcommand("dot", "emit the Hasse diagram in DOT");
  lattice_opt(dot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      Lattice L = open_lattice(lattice_arg);
      out << L.size() << " elements, bottom " << L.label(L.bottom()) << ", top " << L.label(L.top()) << ", "
          << L.cover_pairs().size() << " covers\n";
      return kOk;
    }
    if (*dot_cmd) {
      out << emit_dot(open_lattice(lattice_arg));
      return kOk;
    }
    if (*gen_cmd) {
      std::vector<Lattice> lattices;
      if (enumerate_n) {
        lattices = enumerate_lattices(enumerate_n);
      } else {
        lattices.push_back(random_lattice({gen_size, seed}));
      }
      for (std::size_t i = 0; i < lattices.size(); ++i) {
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          std::ostringstream name;
          name << out_dir << "/lattice_" << lattices[i].size() << "_" << (i + 1) << ".lat";
          write_file(name.str(), emit_lattice(lattices[i]));
        } else {
          if (lattices.size() > 1) out << "# lattice " << (i + 1) << " of " << lattices.size() << "\n";
          out << emit_lattice(lattices[i]);
        }
      }
      if (!out_dir.empty()) out << lattices.size() << " lattices written to " << out_dir << "\n";
      return kOk;
    }

    Lattice L = open_lattice(lattice_arg);
    const ElementId e = L.at(e_arg);

    if (*regions_cmd) {
      RegionSets r = regions(L, e);
      out << "I_e = " << fmt_set(L, r.I_e) << "\n";
      out << "D(e) = " << fmt_pairs(L, r.D_e) << "\n";
      out << "D(e)' = " << fmt_pairs(L, r.D_e_prime) << "\n";
      out << "E(e) = " << fmt_pairs(L, r.E_e) << "\n";
      out << "E(e)' = " << fmt_pairs(L, r.E_e_prime) << "\n";
      return kOk;
    }
    if (*verify_cmd) {
      OpTable op = parse_table(read_file(table_arg), L);
      VerificationReport r = check_uninorm(op, e);
      print_verification(out, op, r);
      return r.is_uninorm ? kOk : kViolated;
    }

    const MethodId method = parse_method(method_arg);
    const std::vector<ElementId> chain = chain_from(L, comps.chain);

    if (*audit_cmd) {
      AuditReport r = iff_audit(method, L, e, component_stream(method, L, e, chain, cap), chain);
      for (const auto& c : r.cases) {
        out << (c.conditions_hold ? "conditions hold" : "conditions fail") << ", "
            << (c.is_uninorm ? "uninorm" : "not a uninorm") << ": " << c.components << "\n";
      }
      if (r.skipped) out << r.skipped << " component cases skipped (hypothesis fails)\n";
      if (r.cases.empty()) {
        out << "no admissible component cases\n";
        return kOk;
      }
      if (r.iff_respected) {
        out << "iff respected over " << r.cases.size() << " component cases\n";
        return kOk;
      }
      out << "iff violated in " << r.violations.size() << " of " << r.cases.size() << " component cases\n";
      return kViolated;
    }

    ConstructionSpec spec{L, e, method, components_from(comps, method, L, e, chain), chain, force};
    if (*conditions_cmd) {
      ConditionReport r = check_preconditions(spec);
      print_conditions(out, L, r);
      return r.all_hold() ? kOk : kViolated;
    }
    if (*construct_cmd) {
      try {
        OpTable op = construct(spec);
        if (out_arg.empty()) {
          out << emit_table(op);
        } else {
          write_file(out_arg, emit_table(op));
        }
        return kOk;
      } catch (const PreconditionError& pe) {
        err << "error: " << pe.what() << "\n";
        print_conditions(out, L, pe.report());
        return kViolated;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace unilat
