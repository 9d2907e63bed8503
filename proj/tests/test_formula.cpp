#include <doctest.h>

#include "di9/classical.hpp"
#include "di9/errors.hpp"
#include "di9/formula.hpp"
#include "di9/harness.hpp"

using namespace di9;

TEST_CASE("parse core connectives") {
  const FormulaPtr f = parse_formula("p | ~q");
  REQUIRE(f->kind() == Formula::Kind::Or);
  CHECK(f->left()->kind() == Formula::Kind::Atom);
  CHECK(f->left()->name() == "p");
  REQUIRE(f->right()->kind() == Formula::Kind::Not);
  CHECK(f->right()->operand()->name() == "q");
}

TEST_CASE("sugar desugars into core") {
  const auto p = Formula::atom("p");
  const auto q = Formula::atom("q");

  CHECK(equal(parse_formula("p -> p"), Formula::disjunction(Formula::negation(p), p)));
  // p & q  =>  ~(~p | ~q)
  CHECK(equal(parse_formula("p & q"),
              Formula::negation(
                  Formula::disjunction(Formula::negation(p), Formula::negation(q)))));
  CHECK(equal(parse_formula("p <-> q"), Formula::biconditional(p, q)));
  CHECK(equal(parse_formula("!p"), parse_formula("~p")));
}

TEST_CASE("precedence and associativity") {
  // Tightest first: ~ & | -> <->.
  CHECK(equal(parse_formula("~p & q"), parse_formula("(~p) & q")));
  CHECK(equal(parse_formula("p & q | r"), parse_formula("(p & q) | r")));
  CHECK(equal(parse_formula("p | q -> r"), parse_formula("(p | q) -> r")));
  CHECK(equal(parse_formula("p -> q <-> r"), parse_formula("(p -> q) <-> r")));
  // -> right-associative, the rest left-associative.
  CHECK(equal(parse_formula("p -> q -> r"), parse_formula("p -> (q -> r)")));
  CHECK(equal(parse_formula("p | q | r"), parse_formula("(p | q) | r")));
  CHECK(equal(parse_formula("p & q & r"), parse_formula("(p & q) & r")));
  CHECK(equal(parse_formula("p <-> q <-> r"), parse_formula("(p <-> q) <-> r")));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("   "), ParseError);
  CHECK_THROWS_AS(parse_formula("p |"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p | q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p @ q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  try {
    parse_formula("p @ q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("render examples") {
  const auto p = Formula::atom("p");
  const auto q = Formula::atom("q");
  CHECK(render(Formula::disjunction(p, Formula::negation(q))) == "p | ~q");
  CHECK(render(Formula::negation(Formula::disjunction(p, q))) == "~(p | q)");
  CHECK(render(p) == "p");
  // Right-nested disjunction forces parentheses.
  CHECK(render(Formula::disjunction(p, Formula::disjunction(q, p))) == "p | (q | p)");
}

TEST_CASE("atoms are sorted and deduplicated") {
  CHECK(atoms(parse_formula("p | ~q")) == std::vector<std::string>{"p", "q"});
  CHECK(atoms(parse_formula("p | ~p")) == std::vector<std::string>{"p"});
  CHECK(atoms(parse_formula("~~r")) == std::vector<std::string>{"r"});
  CHECK(atoms(parse_formula("q | b | a")) == std::vector<std::string>{"a", "b", "q"});
}

TEST_CASE("round-trip on generated formulas") {
  Rng rng(7);
  GenParams params;
  for (int i = 0; i < 1000; ++i) {
    const FormulaPtr f = gen_formula(rng, params);
    CAPTURE(render(f));
    CHECK(equal(parse_formula(render(f)), f));
  }
}

// Desugaring must agree with the textbook truth tables of the sugared
// connectives under every bivalent assignment.
TEST_CASE("desugaring is classically faithful") {
  const auto check_binary = [](const std::string& text, auto table) {
    const FormulaPtr f = parse_formula(text);
    for (const bool a : {true, false}) {
      for (const bool b : {true, false}) {
        ClassicalAssignment assign;
        assign.set("p", a);
        assign.set("q", b);
        CAPTURE(text);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(eval_classical(assign, f) == table(a, b));
      }
    }
  };
  check_binary("p & q", [](bool a, bool b) { return a && b; });
  check_binary("p -> q", [](bool a, bool b) { return !a || b; });
  check_binary("p <-> q", [](bool a, bool b) { return a == b; });

  // Nested sugar over three atoms, exhaustively.
  const FormulaPtr f = parse_formula("(p & q) -> (q <-> r)");
  for (const bool a : {true, false})
    for (const bool b : {true, false})
      for (const bool c : {true, false}) {
        ClassicalAssignment assign;
        assign.set("p", a);
        assign.set("q", b);
        assign.set("r", c);
        CHECK(eval_classical(assign, f) == (!(a && b) || (b == c)));
      }
}

TEST_CASE("atom name validation") {
  CHECK_THROWS_AS(Formula::atom(""), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("1p"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom("a-b"), std::invalid_argument);
  CHECK(Formula::atom("_x9")->name() == "_x9");
}
