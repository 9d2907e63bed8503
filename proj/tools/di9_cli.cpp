// di9: command-line surface for the trivalent temporal semantics library.
//
// Exit codes: 0 success; 1 semantic negative under --strict; 2 usage or
// parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "di9/classical.hpp"
#include "di9/consequence.hpp"
#include "di9/errors.hpp"
#include "di9/formula.hpp"
#include "di9/harness.hpp"
#include "di9/trivalent.hpp"
#include "di9/world.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t atom_bound() {
  if (const char* env = std::getenv("DI9_MAX_ATOMS")) return std::stoul(env);
  return di9::kDefaultAtomBound;
}

std::string render_assignment(const di9::ClassicalAssignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ' ';
    out += name + "=" + (value ? "T" : "F");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DI9 trivalent temporal semantics for propositional logic"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "exit 1 on a semantically negative result");

  std::string world_path, formula_text, at_text, conclusion_text;
  std::vector<std::string> probe_texts, premise_texts;

  auto* cmd_eval = app.add_subcommand("eval", "value of a formula in a world at a moment");
  cmd_eval->add_option("--world", world_path, "world file")->required();
  cmd_eval->add_option("--formula", formula_text, "formula text")->required();
  cmd_eval->add_option("--at", at_text, "query moment (rational)")->required();

  auto* cmd_traj = app.add_subcommand("trajectory", "values at a list of probe moments");
  cmd_traj->add_option("--world", world_path)->required();
  cmd_traj->add_option("--formula", formula_text)->required();
  cmd_traj->add_option("--probe", probe_texts, "probe moment, repeatable, strictly increasing")
      ->required();

  auto* cmd_settle = app.add_subcommand("settle", "earliest moment the formula has a truth value");
  cmd_settle->add_option("--world", world_path)->required();
  cmd_settle->add_option("--formula", formula_text)->required();

  auto* cmd_taut = app.add_subcommand("taut", "classical tautology check");
  cmd_taut->add_option("--formula", formula_text)->required();

  auto* cmd_entails = app.add_subcommand("entails", "DI9 logical consequence check");
  cmd_entails->add_option("--premise", premise_texts, "premise formula, repeatable");
  cmd_entails->add_option("--conclusion", conclusion_text)->required();

  di9::GenParams gen;
  auto* cmd_fuzz = app.add_subcommand("fuzz", "run the randomized property suite");
  cmd_fuzz->add_option("--seed", gen.seed);
  cmd_fuzz->add_option("--iterations", gen.iterations);
  cmd_fuzz->add_option("--max-atoms", gen.max_atoms);
  cmd_fuzz->add_option("--max-depth", gen.max_depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::size_t bound = atom_bound();

    if (*cmd_eval) {
      const di9::Valuation world = di9::parse_world(read_file(world_path));
      const di9::FormulaPtr f = di9::parse_formula(formula_text);
      const di9::TimePoint at{di9::Rational::parse(at_text)};
      std::cout << di9::tri_char(di9::eval_recursive(world, f, at, bound)) << "\n";
      return 0;
    }

    if (*cmd_traj) {
      const di9::Valuation world = di9::parse_world(read_file(world_path));
      const di9::FormulaPtr f = di9::parse_formula(formula_text);
      std::vector<di9::TimePoint> probes;
      for (const auto& t : probe_texts) probes.emplace_back(di9::Rational::parse(t));
      for (const auto& [moment, value] : di9::trajectory(world, f, probes, bound).points)
        std::cout << moment.str() << " " << di9::tri_char(value) << "\n";
      return 0;
    }

    if (*cmd_settle) {
      const di9::Valuation world = di9::parse_world(read_file(world_path));
      const di9::FormulaPtr f = di9::parse_formula(formula_text);
      const di9::Settlement s = di9::settlement(world, f, bound);
      std::cout << s.moment.str() << " " << (s.value ? "T" : "F") << "\n";
      return 0;
    }

    if (*cmd_taut) {
      const di9::FormulaPtr f = di9::parse_formula(formula_text);
      const di9::TautConsequence result = di9::tautological_consequence({}, f, bound);
      if (result.holds) {
        std::cout << "tautology\n";
        return 0;
      }
      std::cout << "not-tautology\n";
      std::cout << "countermodel: " << render_assignment(*result.countermodel) << "\n";
      return strict ? 1 : 0;
    }

    if (*cmd_entails) {
      std::vector<di9::FormulaPtr> premises;
      for (const auto& p : premise_texts) premises.push_back(di9::parse_formula(p));
      const di9::FormulaPtr conclusion = di9::parse_formula(conclusion_text);
      const di9::ConsequenceVerdict verdict = di9::di9_consequence(premises, conclusion, bound);
      if (verdict.holds) {
        std::cout << "holds\n";
        return 0;
      }
      const auto& [world, moment] = *verdict.countermodel;
      std::cout << "fails\n";
      std::cout << "at " << moment.str() << "\n";
      std::cout << di9::render_world(world);
      return strict ? 1 : 0;
    }

    if (*cmd_fuzz) {
      const di9::PropertyReport report = di9::run_suite(gen);
      std::cout << report.render_text();
      return (strict && report.total_failures() > 0) ? 1 : 0;
    }
  } catch (const di9::ParseError& e) {
    std::cerr << "parse error at " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
