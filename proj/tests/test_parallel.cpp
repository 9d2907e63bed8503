// The OpenMP truth-table scans must be indistinguishable from the serial
// reference implementations, countermodels included.

#include <doctest.h>

#include "di9/classical.hpp"
#include "di9/harness.hpp"

using namespace di9;

TEST_CASE("parallel scan matches serial reference") {
  Rng rng(53);
  GenParams params;
  params.max_atoms = 5;
  params.max_depth = 5;
  for (int i = 0; i < 300; ++i) {
    const FormulaPtr f = gen_formula(rng, params);
    CHECK(is_tautology(f) == is_tautology_serial(f));

    std::vector<FormulaPtr> premises;
    const int count = i % 3;
    for (int k = 0; k < count; ++k) premises.push_back(gen_formula(rng, params));
    const FormulaPtr conclusion = gen_formula(rng, params);
    const TautConsequence parallel = tautological_consequence(premises, conclusion);
    const TautConsequence serial = tautological_consequence_serial(premises, conclusion);
    CHECK(parallel.holds == serial.holds);
    CHECK(parallel.countermodel == serial.countermodel);
  }
}

TEST_CASE("parallel scan on a wider formula") {
  // 14 atoms, 16384 rows: enough to split across threads.
  std::string text;
  for (int i = 1; i < 14; ++i) {
    if (!text.empty()) text += " | ";
    text += "(p" + std::to_string(i) + " <-> p" + std::to_string(i + 1) + ")";
  }
  const FormulaPtr f = parse_formula(text);
  CHECK(is_tautology(f) == is_tautology_serial(f));

  const FormulaPtr padded = parse_formula(text + " | ~(" + text + ")");
  CHECK(is_tautology(padded));
  CHECK(is_tautology_serial(padded));
}
