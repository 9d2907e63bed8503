#include "di9/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "di9/errors.hpp"

namespace di9 {

FormulaPtr Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    throw std::invalid_argument("bad atom name: " + name);
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw std::invalid_argument("bad atom name: " + name);
  return FormulaPtr(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::negation(FormulaPtr operand) {
  return FormulaPtr(new Formula(Kind::Not, {}, std::move(operand), nullptr));
}

FormulaPtr Formula::disjunction(FormulaPtr left, FormulaPtr right) {
  return FormulaPtr(new Formula(Kind::Or, {}, std::move(left), std::move(right)));
}

FormulaPtr Formula::conjunction(FormulaPtr left, FormulaPtr right) {
  return negation(disjunction(negation(std::move(left)), negation(std::move(right))));
}

FormulaPtr Formula::implication(FormulaPtr left, FormulaPtr right) {
  return disjunction(negation(std::move(left)), std::move(right));
}

FormulaPtr Formula::biconditional(FormulaPtr left, FormulaPtr right) {
  return conjunction(implication(left, right), implication(right, left));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom:
      return a->name() == b->name();
    case Formula::Kind::Not:
      return equal(a->operand(), b->operand());
    case Formula::Kind::Or:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
  return false;
}

namespace {

enum class Tok { Ident, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_pos); }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    const char c = text[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
      ident = std::string(text.substr(pos, end - pos));
      pos = end;
      tok = Tok::Ident;
      return;
    }
    switch (c) {
      case '~':
      case '!':
        ++pos;
        tok = Tok::Not;
        return;
      case '&':
        ++pos;
        tok = Tok::And;
        return;
      case '|':
        ++pos;
        tok = Tok::Or;
        return;
      case '(':
        ++pos;
        tok = Tok::LParen;
        return;
      case ')':
        ++pos;
        tok = Tok::RParen;
        return;
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          pos += 2;
          tok = Tok::Implies;
          return;
        }
        fail("expected '->'");
      case '<':
        if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
          pos += 3;
          tok = Tok::Iff;
          return;
        }
        fail("expected '<->'");
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(std::string_view text) : lex(text) {}

  FormulaPtr parse() {
    if (lex.tok == Tok::End) lex.fail("empty formula");
    FormulaPtr f = iff();
    if (lex.tok != Tok::End) lex.fail("unexpected trailing input");
    return f;
  }

  FormulaPtr iff() {
    FormulaPtr f = implies();
    while (lex.tok == Tok::Iff) {
      lex.advance();
      f = Formula::biconditional(std::move(f), implies());
    }
    return f;
  }

  FormulaPtr implies() {
    FormulaPtr f = disj();
    if (lex.tok == Tok::Implies) {
      lex.advance();
      f = Formula::implication(std::move(f), implies());  // right-assoc
    }
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (lex.tok == Tok::Or) {
      lex.advance();
      f = Formula::disjunction(std::move(f), conj());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = unary();
    while (lex.tok == Tok::And) {
      lex.advance();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  FormulaPtr unary() {
    if (lex.tok == Tok::Not) {
      lex.advance();
      return Formula::negation(unary());
    }
    return primary();
  }

  FormulaPtr primary() {
    if (lex.tok == Tok::Ident) {
      FormulaPtr f = Formula::atom(lex.ident);
      lex.advance();
      return f;
    }
    if (lex.tok == Tok::LParen) {
      lex.advance();
      FormulaPtr f = iff();
      if (lex.tok != Tok::RParen) lex.fail("expected ')'");
      lex.advance();
      return f;
    }
    lex.fail("expected atom, '~', or '('");
  }
};

void render_into(const FormulaPtr& f, std::string& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      out += f->name();
      break;
    case Formula::Kind::Not:
      out += '~';
      if (f->operand()->kind() == Formula::Kind::Or) {
        out += '(';
        render_into(f->operand(), out);
        out += ')';
      } else {
        render_into(f->operand(), out);
      }
      break;
    case Formula::Kind::Or:
      render_into(f->left(), out);
      out += " | ";
      // '|' parses left-associative, so a right Or child needs parentheses.
      if (f->right()->kind() == Formula::Kind::Or) {
        out += '(';
        render_into(f->right(), out);
        out += ')';
      } else {
        render_into(f->right(), out);
      }
      break;
  }
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      out.insert(f->name());
      break;
    case Formula::Kind::Not:
      collect_atoms(f->operand(), out);
      break;
    case Formula::Kind::Or:
      collect_atoms(f->left(), out);
      collect_atoms(f->right(), out);
      break;
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render(const FormulaPtr& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::vector<std::string> atoms(const FormulaPtr& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return {names.begin(), names.end()};
}

std::size_t depth(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return 0;
    case Formula::Kind::Not:
      return 1 + depth(f->operand());
    case Formula::Kind::Or:
      return 1 + std::max(depth(f->left()), depth(f->right()));
  }
  return 0;
}

}  // namespace di9
