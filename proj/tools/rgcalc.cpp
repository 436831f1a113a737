// Command-line driver: axiom and law suites, single laws, ad-hoc refinement
// queries and the rem-from-set scenario. Exit 0 when every item behaves as
// expected, 1 on any failure, 2 on usage or configuration errors.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rgcalc/example.hpp"
#include "rgcalc/laws.hpp"
#include "rgcalc/report.hpp"
#include "rgcalc/semantics.hpp"
#include "rgcalc/syntax.hpp"

namespace {

using namespace rgc;

constexpr const char* kDefaultSpace = "var x : {0, 1}\n";
constexpr std::size_t kExampleBound = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LawReport refine_item(const Command& lhs, const Command& rhs, std::size_t K) {
  LawReport rep;
  rep.name = "refine";
  rep.group = "query";
  rep.strategy = "exhaustive";
  rep.instances = rep.proviso_met = 1;
  rep.status = LawStatus::Pass;
  if (auto cex = find_counterexample(lhs, rhs, K)) {
    rep.status = LawStatus::Fail;
    rep.failure_count = 1;
    rep.failures.push_back({{}, "lhs ⪰ rhs", render(cex->behavior, *lhs->space()), cex->frontier});
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded trace-set checker for the rely/guarantee refinement calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string space_file, json_path;
  std::size_t bound = 3, samples = 0, max_states = kDefaultStateCap;
  std::uint64_t seed = Strategy{}.seed;
  bool exhaustive = false;
  app.add_option("--space", space_file, "State space file (default: one variable x : {0,1})");
  auto* bound_opt = app.add_option("--bound", bound, "Trace length bound K")->check(CLI::Range(1, 16));
  app.add_option("--seed", seed, "Seed for random sampling");
  auto* samples_opt = app.add_option("--samples", samples, "Random samples per law")->check(CLI::PositiveNumber);
  app.add_flag("--exhaustive", exhaustive, "Enumerate the parameter lattice when it is small enough");
  app.add_option("--json", json_path, "Write the JSON report here");
  app.add_option("--max-states", max_states, "Refuse spaces with more states")->check(CLI::PositiveNumber);

  auto* axioms = app.add_subcommand("axioms", "Check the algebra's axioms");
  auto* suite = app.add_subcommand("suite", "Check all laws, axioms and negative controls");
  std::string law_name;
  auto* law = app.add_subcommand("law", "Check one law, axiom or negative control");
  law->add_option("name", law_name)->required();
  std::string lhs_file, rhs_file;
  auto* refine = app.add_subcommand("refine", "Decide lhs ⪰ rhs for two command files");
  refine->add_option("lhs", lhs_file)->required();
  refine->add_option("rhs", rhs_file)->required();
  std::string scenario;
  auto* example = app.add_subcommand("example", "Run a worked example");
  example->add_option("name", scenario)->required()->check(CLI::IsMember({"rem-from-set"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Strategy strategy;
  strategy.seed = seed;
  if (*samples_opt) {
    strategy.samples = samples;
    strategy.force_random = !exhaustive;
  }

  RunReport run;
  run.bound = bound;
  try {
    if (example->parsed()) {
      if (!space_file.empty()) throw UsageError("example uses its own state space; drop --space");
      if (!*bound_opt) run.bound = kExampleBound;
      run.space = rem_from_set_space(2)->digest();
      run.items = rem_from_set_scenario(run.bound);
    } else {
      Space sp = parse_space(space_file.empty() ? kDefaultSpace : slurp(space_file), max_states);
      run.space = sp->digest();
      if (refine->parsed()) {
        Command lhs = parse_command(slurp(lhs_file), sp);
        Command rhs = parse_command(slurp(rhs_file), sp);
        run.items.push_back(refine_item(lhs, rhs, bound));
      } else {
        LawContext ctx = LawContext::make(sp, bound);
        auto run_all = [&](const std::vector<LawSpec>& laws) {
          for (const auto& l : laws) run.items.push_back(check_law(l, ctx, strategy));
        };
        if (axioms->parsed()) {
          run_all(axiom_registry());
        } else if (suite->parsed()) {
          run_all(law_registry());
          run_all(axiom_registry());
          run_all(negative_controls());
        } else if (law->parsed()) {
          const LawSpec* l = find_law(law_name);
          if (!l) throw UsageError("unknown law: " + law_name);
          run.items.push_back(check_law(*l, ctx, strategy));
        }
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CommandError& e) {
    std::cerr << "command error: " << e.what() << "\n";
    return 2;
  } catch (const SpaceMismatch& e) {
    std::cerr << "space mismatch: " << e.what() << "\n";
    return 2;
  }

  std::cout << report_text(run);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << report_json(run);
  }
  return run_passes(run) ? 0 : 1;
}
