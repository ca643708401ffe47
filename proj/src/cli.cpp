#include "dmt/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "dmt/engine.hpp"
#include "dmt/model_io.hpp"
#include "dmt/parser.hpp"

namespace dmt::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "@path" reads the formula from a file.
std::string formula_text(const std::string& arg) {
  if (arg.starts_with('@')) return read_text_file(arg.substr(1));
  return arg;
}

Formula read_formula(const std::string& arg) { return parse_formula(formula_text(arg)); }

std::size_t env_limit(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

tableau::Options tableau_options(bool trace) {
  tableau::Options o;
  o.limits.max_rule_applications = env_limit("DMT_MAX_RULE_APPS", o.limits.max_rule_applications);
  o.limits.max_labels = env_limit("DMT_MAX_LABELS", o.limits.max_labels);
  o.trace = trace;
  return o;
}

void print_trace(const tableau::Verdict& v, std::ostream& out) {
  for (const auto& line : v.trace) out << line << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for modal logic K with defeasible modalities", "dmt"};
  app.require_subcommand(1);

  std::string formula;
  std::string path_out;
  std::string model_path;
  std::string kb_path;
  std::string at_world;
  bool trace = false;
  bool global = false;
  std::size_t max_depth = 0;
  std::size_t max_worlds = 0;

  auto* sat = app.add_subcommand("sat", "Decide satisfiability with the tableau");
  sat->add_option("formula", formula, "Formula, or @file")->required();
  sat->add_option("--model-out", path_out, "Write the satisfying model as JSON");
  sat->add_flag("--trace", trace, "Print one line per rule application");

  auto* valid = app.add_subcommand("valid", "Decide validity with the tableau");
  valid->add_option("formula", formula, "Formula, or @file")->required();
  valid->add_option("--countermodel-out", path_out, "Write a countermodel as JSON");
  valid->add_flag("--trace", trace, "Print one line per rule application");

  auto* check = app.add_subcommand("check", "Evaluate a formula or conditional on a model");
  check->add_option("--model", model_path, "Model file (JSON)")->required();
  check->add_option("statement", formula, "Formula or 'a |~ b', or @file")->required();
  auto* at_opt = check->add_option("--at", at_world, "Evaluate at one world");
  check->add_flag("--global", global, "Evaluate at every world (default)")->excludes(at_opt);

  auto* entails = app.add_subcommand("entails", "Global entailment from a knowledge base");
  entails->add_option("--kb", kb_path, "Knowledge base file")->required();
  entails->add_option("formula", formula, "Formula, or @file")->required();
  auto* depth_opt = entails->add_option("--max-depth", max_depth, "Deepest box closure to try");
  entails->add_option("--countermodel-out", path_out, "Write a countermodel as JSON");

  auto* oracle_sat = app.add_subcommand("oracle-sat", "Bounded brute-force satisfiability");
  oracle_sat->add_option("formula", formula, "Formula, or @file")->required();
  oracle_sat->add_option("--max-worlds", max_worlds, "Largest model size to enumerate")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "ERROR: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (sat->parsed()) {
      const auto v = tableau::decide(read_formula(formula), tableau_options(trace));
      if (v.is_open()) {
        out << "SAT (world " << tableau::world_name({0}) << ")\n";
        if (!path_out.empty()) save_model(*v.model, path_out);
      } else {
        out << "UNSAT\n";
      }
      print_trace(v, out);
      return v.is_open() ? kAffirmative : kNegative;
    }

    if (valid->parsed()) {
      const auto r = is_valid(read_formula(formula), tableau_options(trace));
      if (r.valid) {
        out << "VALID\n";
      } else {
        out << "INVALID (fails at " << r.countermodel->world << ")\n";
        if (!path_out.empty()) save_model(r.countermodel->model, path_out);
      }
      print_trace(r.verdict, out);
      return r.valid ? kAffirmative : kNegative;
    }

    if (check->parsed()) {
      const PreferentialModel m = load_model(model_path);
      const Statement st = parse_statement(formula_text(formula));
      bool holds = false;
      if (st.is_conditional) {
        if (!at_world.empty()) throw UsageError("conditionals are evaluated on the whole model");
        holds = holds_conditional(m, st.conditional);
        out << (holds ? "HOLDS" : "FAILS") << " (conditional)\n";
      } else if (!at_world.empty()) {
        holds = holds_at(m, at_world, st.formula);
        out << (holds ? "HOLDS" : "FAILS") << " (at " << at_world << ")\n";
      } else {
        holds = globally_true(m, st.formula);
        out << (holds ? "HOLDS" : "FAILS") << " (globally)\n";
      }
      return holds ? kAffirmative : kNegative;
    }

    if (entails->parsed()) {
      const KnowledgeBase kb = load_kb(kb_path);
      const Formula f = read_formula(formula);
      EntailmentOptions opts;
      opts.tableau = tableau_options(false);
      const std::size_t depth = depth_opt->count() ? max_depth : default_max_depth(f);
      const auto v = global_entails(kb, f, depth, opts);
      switch (v.kind) {
        case EntailmentVerdict::Kind::Entailed:
          out << "ENTAILED (depth " << v.depth << ")\n";
          return kAffirmative;
        case EntailmentVerdict::Kind::NotEntailed:
          out << "NOT-ENTAILED (fails at " << v.countermodel->world << ")\n";
          if (!path_out.empty()) save_model(v.countermodel->model, path_out);
          return kNegative;
        case EntailmentVerdict::Kind::Unknown:
          out << "UNKNOWN (max depth " << v.depth << ")\n";
          return kExhausted;
      }
    }

    if (oracle_sat->parsed()) {
      const Formula f = read_formula(formula);
      const auto hit = brute_force_satisfiable(f, signature_of({f}, max_worlds));
      if (hit) {
        out << "SAT (world " << hit->world << ", " << hit->model.world_count() << " worlds)\n";
        return kAffirmative;
      }
      out << "NO-MODEL (up to " << max_worlds << " worlds)\n";
      return kNegative;
    }
  } catch (const ParseError& e) {
    err << "ERROR: syntax: " << e.what() << '\n';
    return kUsageError;
  } catch (const tableau::ResourceExhausted& e) {
    out << "RESOURCE-EXHAUSTED (" << e.what() << ")\n";
    return kExhausted;
  } catch (const std::exception& e) {
    // model, oracle, file and usage errors
    err << "ERROR: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dmt::cli
