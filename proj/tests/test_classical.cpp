#include <doctest.h>

#include "di9/classical.hpp"
#include "di9/errors.hpp"
#include "di9/harness.hpp"

using namespace di9;

namespace {

ClassicalAssignment assign(std::initializer_list<std::pair<const char*, bool>> pairs) {
  ClassicalAssignment a;
  for (const auto& [name, value] : pairs) a.set(name, value);
  return a;
}

}  // namespace

TEST_CASE("eval_classical basics") {
  CHECK(eval_classical(assign({{"p", true}, {"q", false}}), parse_formula("p | q")));
  CHECK(eval_classical(assign({{"p", false}}), parse_formula("~p")));
  CHECK_FALSE(eval_classical(assign({{"p", false}, {"q", false}}), parse_formula("p | q")));
}

TEST_CASE("undeclared atom lookup names the atom") {
  try {
    eval_classical(assign({{"p", true}}), parse_formula("p | q"));
    FAIL("expected UndeclaredAtomError");
  } catch (const UndeclaredAtomError& e) {
    CHECK(e.atom == "q");
  }
}

TEST_CASE("all_assignments enumeration") {
  const auto one = all_assignments({"p"});
  REQUIRE(one.size() == 2);
  CHECK(one[0] == assign({{"p", true}}));
  CHECK(one[1] == assign({{"p", false}}));

  const auto none = all_assignments({});
  REQUIRE(none.size() == 1);
  CHECK(none[0].size() == 0);

  CHECK(all_assignments({"p", "q"}).size() == 4);
}

TEST_CASE("all_assignments bound") {
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(all_assignments(many), BoundExceededError);
  CHECK(all_assignments(many, 21).size() == (1u << 21));
}

TEST_CASE("is_tautology") {
  CHECK(is_tautology(parse_formula("p | ~p")));
  CHECK_FALSE(is_tautology(parse_formula("p")));

  // Oracle: exhaustive 4-row table computed directly from bool operations.
  bool expected = true;
  for (const bool p : {true, false})
    for (const bool q : {true, false}) expected = expected && ((!p || q) || (!q || p));
  REQUIRE(expected);
  CHECK(is_tautology(parse_formula("(p -> q) | (q -> p)")));
}

TEST_CASE("tautological_consequence") {
  const auto mp = tautological_consequence({parse_formula("p"), parse_formula("p -> q")},
                                           parse_formula("q"));
  CHECK(mp.holds);
  CHECK_FALSE(mp.countermodel.has_value());

  const auto bad = tautological_consequence({parse_formula("p | q")}, parse_formula("p"));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.countermodel.has_value());
  CHECK(*bad.countermodel == assign({{"p", false}, {"q", true}}));

  const auto empty = tautological_consequence({}, parse_formula("p | ~p"));
  CHECK(empty.holds);
}

TEST_CASE("consequence countermodels re-check") {
  Rng rng(11);
  GenParams params;
  params.max_atoms = 4;
  params.max_depth = 4;
  for (int i = 0; i < 300; ++i) {
    std::vector<FormulaPtr> premises;
    if (i % 2 == 0) premises.push_back(gen_formula(rng, params));
    const FormulaPtr conclusion = gen_formula(rng, params);
    const auto result = tautological_consequence(premises, conclusion);
    if (result.holds) continue;
    REQUIRE(result.countermodel.has_value());
    for (const auto& p : premises) CHECK(eval_classical(*result.countermodel, p));
    CHECK_FALSE(eval_classical(*result.countermodel, conclusion));
  }
}

TEST_CASE("double negation is classically transparent") {
  Rng rng(3);
  GenParams params;
  params.max_atoms = 4;
  for (int i = 0; i < 300; ++i) {
    const FormulaPtr f = gen_formula(rng, params);
    const FormulaPtr nn = Formula::negation(Formula::negation(f));
    for (const auto& a : all_assignments(atoms(f)))
      CHECK(eval_classical(a, f) == eval_classical(a, nn));
  }
}

TEST_CASE("is_tautology agrees with empty-premise consequence") {
  Rng rng(5);
  GenParams params;
  params.max_atoms = 4;
  for (int i = 0; i < 300; ++i) {
    const FormulaPtr f = gen_formula(rng, params);
    CHECK(is_tautology(f) == tautological_consequence({}, f).holds);
  }
}
