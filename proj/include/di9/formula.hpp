#ifndef DI9_FORMULA_HPP
#define DI9_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace di9 {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable abstract syntax tree over the core connectives: atoms,
/// negation, and disjunction. Sugar connectives never appear here; the
/// builders below desugar them at construction time.
class Formula {
 public:
  enum class Kind { Atom, Not, Or };

  static FormulaPtr atom(std::string name);
  static FormulaPtr negation(FormulaPtr operand);
  static FormulaPtr disjunction(FormulaPtr left, FormulaPtr right);

  // Sugar builders. a & b  =>  ~(~a | ~b);  a -> b  =>  ~a | b;
  // a <-> b  =>  (a -> b) & (b -> a).
  static FormulaPtr conjunction(FormulaPtr left, FormulaPtr right);
  static FormulaPtr implication(FormulaPtr left, FormulaPtr right);
  static FormulaPtr biconditional(FormulaPtr left, FormulaPtr right);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }      // Atom only
  const FormulaPtr& operand() const { return left_; }    // Not only
  const FormulaPtr& left() const { return left_; }       // Or only
  const FormulaPtr& right() const { return right_; }     // Or only

 private:
  Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right)
      : kind_(kind), name_(std::move(name)), left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

/// Structural equality.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// Parses the concrete syntax. Precedence, tightest first: ~ & | -> <->.
/// `->` is right-associative, the others left-associative; `!` is a synonym
/// for `~`. Throws ParseError with a byte offset on malformed input.
FormulaPtr parse_formula(std::string_view text);

/// Renders with minimal parentheses; parse_formula(render(f)) == f.
std::string render(const FormulaPtr& f);

/// Atom names occurring in f, sorted lexicographically, deduplicated.
std::vector<std::string> atoms(const FormulaPtr& f);

std::size_t depth(const FormulaPtr& f);

}  // namespace di9

#endif
