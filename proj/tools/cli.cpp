#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "hypermat/characters.hpp"
#include "hypermat/euler.hpp"
#include "hypermat/io.hpp"
#include "hypermat/localcoh.hpp"
#include "hypermat/multiplicities.hpp"
#include "hypermat/orbits.hpp"
#include "hypermat/quiver.hpp"
#include "hypermat/simples.hpp"
#include "hypermat/verify.hpp"

namespace hypermat::cli {

namespace {

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const char* flag) {
  std::int64_t lo = 0, hi = 0;
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> lo >> comma >> hi) || comma != ',' || !is.eof() || lo > hi)
    throw ParseError(std::string(flag) + " expects lo,hi with lo <= hi, got \"" + text + "\"");
  return {lo, hi};
}

NamedCharacter named_character(const std::string& text) {
  if (auto c = parse_named_character(text)) return *c;
  throw ParseError("unknown module \"" + text + "\" (expected S, SymV, E, S_h or S_h_sqrt)");
}

SimpleId simple(const std::string& text) {
  if (auto s = parse_simple(text)) return *s;
  throw ParseError("unknown simple \"" + text + "\"");
}

ModuleId module(const std::string& text) {
  if (auto m = parse_module(text)) return *m;
  throw ParseError("unknown module \"" + text + "\"");
}

// Quiver vertex by vertex name (d1) or simple name (D1).
std::size_t vertex(const Quiver& q, const std::string& text) {
  for (std::size_t v = 0; v < q.vertices().size(); ++v)
    if (q.vertices()[v] == text) return v;
  if (auto s = parse_simple(text)) return q.vertex(vertex_name(*s));
  throw ParseError("unknown quiver vertex \"" + text + "\"");
}

json optional_mult(const std::optional<std::int64_t>& m) { return m ? json(*m) : json("unknown"); }

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

void print_failures(const Report& r, std::ostream& err) {
  for (const auto& c : r.checks)
    if (!c.passed) err << "  failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GL-equivariant computations on 2x2x2 hypermatrices", "hypermat"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.fallthrough();
  bool detailed = false;
  app.add_flag("--json", detailed, "Emit a JSON object echoing the inputs instead of a bare value");

  std::string weight_text, module_text, simple_text, supports_text, tensor_path, box_text, size_text;
  std::string from_text, to_text, target_name;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t dmax = 12;
  std::size_t cap = kDefaultLengthCap;

  auto* mult_cmd = app.add_subcommand("mult", "Multiplicity of a weight in S, SymV, E, S_h or S_h_sqrt");
  mult_cmd->add_option("--module", module_text, "S, SymV, E, S_h or S_h_sqrt")->required();
  mult_cmd->add_option("--weight", weight_text, "Triple weight, e.g. [[2,2],[2,2],[2,2]]")->required();

  auto* simple_cmd = app.add_subcommand("simple-mult", "Multiplicity of a weight in a simple D-module");
  simple_cmd->add_option("--simple", simple_text, "E, D1, D122, D212, D221, D5, S or G6")->required();
  simple_cmd->add_option("--weight", weight_text, "Triple weight")->required();

  auto* dump_cmd = app.add_subcommand("dump", "All nonzero multiplicities in a box of weights");
  dump_cmd->add_option("--module", module_text, "S, SymV, E, S_h or S_h_sqrt")->required();
  dump_cmd->add_option("--box", box_text, "Entry range lo,hi")->required();
  dump_cmd->add_option("--sizes", size_text, "Optional range min,max for |lam|, |mu|, |nu|");

  auto* euler_cmd = app.add_subcommand("euler", "Euler-characteristic multiplicity of a weight");
  euler_cmd->add_option("--weight", weight_text, "Triple weight")->required();

  auto* quiver_cmd = app.add_subcommand("quiver", "The quiver with relations");
  quiver_cmd->require_subcommand(1);
  auto* paths_cmd = quiver_cmd->add_subcommand("paths", "Basis of the path space between two vertices");
  paths_cmd->add_option("--from", from_text, "Source vertex, e.g. d1")->required();
  paths_cmd->add_option("--to", to_text, "Target vertex, e.g. g6")->required();
  paths_cmd->add_option("--cap", cap, "Path length cap")->check(CLI::Range(std::size_t{2}, std::size_t{12}));
  auto* qcheck_cmd = quiver_cmd->add_subcommand("check", "Run all quiver invariants");

  auto* lc_cmd = app.add_subcommand("lc", "Iterated local cohomology");
  lc_cmd->add_option("--module", module_text, "Simple or composite module")->required();
  lc_cmd->add_option("--supports", supports_text, "Comma list of orbits, innermost first, e.g. O1,O0")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Orbit of a hypermatrix");
  classify_cmd->add_option("--tensor", tensor_path, "JSON file [[[x111,x112],[x121,x122]],[[x211,x212],[x221,x222]]]")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run an acceptance target, 'all' or 'list'");
  verify_cmd->add_option("target", target_name, "Target name")->required();
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  verify_cmd->add_option("--dmax", dmax, "Largest size for the oracle comparison")->check(CLI::Range(0, 16));

  auto* witness_cmd = app.add_subcommand("witness-table", "Multiplicity of every simple at every witness weight");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  auto emit = [&](const json& j) { out << j.dump() << '\n'; };

  try {
    if (mult_cmd->parsed()) {
      const auto c = named_character(module_text);
      const auto w = parse_triple_weight(weight_text);
      const auto m = mult(c, w);
      emit(detailed ? json{{"module", name(c)}, {"weight", w}, {"mult", m}} : json(m));
    } else if (simple_cmd->parsed()) {
      const auto s = simple(simple_text);
      const auto w = parse_triple_weight(weight_text);
      const auto m = optional_mult(mult_simple(s, w));
      emit(detailed ? json{{"simple", name(s)}, {"weight", w}, {"mult", m}} : m);
    } else if (dump_cmd->parsed()) {
      const auto c = named_character(module_text);
      WeightWindow window;
      std::tie(window.lo, window.hi) = parse_range(box_text, "--box");
      if (!size_text.empty()) {
        const auto [lo, hi] = parse_range(size_text, "--sizes");
        window.min_size = lo;
        window.max_size = hi;
      }
      const auto cls = dump_window(c, window);
      emit(detailed ? json{{"module", name(c)},
                           {"box", {window.lo, window.hi}},
                           {"entries", glclass_to_json(cls)},
                           {"total_dimension", cls.total_dimension()}}
                    : glclass_to_json(cls));
    } else if (euler_cmd->parsed()) {
      const auto w = parse_triple_weight(weight_text);
      const auto m = euler_mult(w);
      emit(detailed ? json{{"weight", w}, {"mult", m}} : json(m));
    } else if (paths_cmd->parsed()) {
      const auto& qr = hypermatrix_quiver();
      const auto ps = path_basis(qr, vertex(qr.quiver, from_text), vertex(qr.quiver, to_text), cap);
      emit(path_space_to_json(qr.quiver, ps));
    } else if (qcheck_cmd->parsed()) {
      const auto report = check_hypermatrix_quiver();
      emit(report_to_json(report));
      print_failures(report, err);
      return report.passed() ? kExitOk : kExitDomainError;
    } else if (lc_cmd->parsed()) {
      const auto m = module(module_text);
      const auto supports = parse_orbit_list(supports_text);
      emit(iterated_lc_to_json(iterated_lc(m, supports)));
    } else if (classify_cmd->parsed()) {
      const auto t = read_tensor_file(tensor_path);
      const auto z = classify_orbit(t);
      if (detailed) {
        const auto r = flattening_ranks(t);
        emit({{"orbit", name(z)},
              {"tensor", tensor_to_json(t)},
              {"orbit_dim", orbit_dim(t)},
              {"hyperdet", hyperdet(t).get_str()},
              {"flattening_ranks", {r.a, r.b, r.c}}});
      } else {
        emit({{"orbit", name(z)}});
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions options{seed, dmax};
      if (target_name == "list") {
        json list = json::array();
        for (const auto& t : verify_targets())
          list.push_back({{"number", t.number}, {"name", t.name}, {"title", t.title}});
        emit(list);
        return kExitOk;
      }
      if (target_name == "oracle") {
        const auto start = std::chrono::steady_clock::now();
        const auto result = verify_against_oracle(dmax);
        err << (result.passed() ? "PASS" : "FAIL") << " oracle ("
            << seconds_text(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) << ")\n";
        auto j = oracle_report_to_json(result);
        j["passed"] = result.passed();
        emit(j);
        return result.passed() ? kExitOk : kExitDomainError;
      }
      std::vector<const VerifyTarget*> targets;
      if (target_name == "all") {
        targets = acceptance_criteria();
      } else if (const auto* t = find_verify_target(target_name)) {
        targets.push_back(t);
      } else {
        std::string names;
        for (const auto& t : verify_targets()) names += " " + std::string(t.name);
        err << "unknown verify target \"" << target_name << "\"; expected all, list or one of:" << names << '\n';
        return kExitParseError;
      }
      json results = json::array();
      bool all_passed = true;
      for (const auto* t : targets) {
        const auto outcome = run_verify_target(*t, options);
        all_passed = all_passed && outcome.passed();
        err << (outcome.passed() ? "PASS " : "FAIL ") << t->number << ' ' << t->name << " ("
            << seconds_text(outcome.seconds) << ")\n";
        print_failures(outcome.report, err);
        auto j = report_to_json(outcome.report);
        j["target"] = t->name;
        j["number"] = t->number;
        results.push_back(j);
      }
      emit(targets.size() == 1 ? results.front() : json{{"passed", all_passed}, {"targets", results}});
      return all_passed ? kExitOk : kExitDomainError;
    } else if (witness_cmd->parsed()) {
      json rows = json::array();
      for (SimpleId s : kAllSimples) {
        const auto w = witness_weight(s);
        json row = json::object();
        for (SimpleId t : kAllSimples) row[std::string(name(t))] = optional_mult(mult_simple(t, w));
        rows.push_back({{"simple", name(s)}, {"witness", w}, {"mults", row}});
      }
      emit(rows);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace hypermat::cli
