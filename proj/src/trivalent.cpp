#include "di9/trivalent.hpp"

#include <algorithm>
#include <stdexcept>

#include "di9/errors.hpp"

namespace di9 {

ClassicalAssignment induced_classical(const Valuation& v,
                                      const std::vector<std::string>& atom_names) {
  ClassicalAssignment a;
  for (const auto& name : atom_names) a.set(name, v.timeline(name).final_value);
  return a;
}

namespace {

// Classical value of f under every completion of v at j, folded into a Tri.
Tri supervaluate(const Valuation& v, const FormulaPtr& f, const TimePoint& j, std::size_t bound) {
  bool any_true = false;
  bool any_false = false;
  for (const ClassicalAssignment& c : j_completions(v, j, atoms(f), bound)) {
    (eval_classical(c, f) ? any_true : any_false) = true;
    if (any_true && any_false) return Tri::O;
  }
  return any_true ? Tri::T : Tri::F;
}

}  // namespace

Tri eval_recursive(const Valuation& v, const FormulaPtr& f, const TimePoint& j,
                   std::size_t bound) {
  if (j.is_always()) throw std::invalid_argument("query moment must not be ALWAYS");
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return atom_value_at(v, f->name(), j);
    case Formula::Kind::Not:
      switch (eval_recursive(v, f->operand(), j, bound)) {
        case Tri::T:
          return Tri::F;
        case Tri::F:
          return Tri::T;
        case Tri::O:
          return Tri::O;
      }
      return Tri::O;
    case Formula::Kind::Or: {
      // The disjunction clause quantifies over all j-extensions; their
      // induced classical interpretations are exactly the completions of
      // the facts settled by j, so the quantifier reduces to a finite scan.
      bool all_satisfy = true;
      bool all_falsify_both = true;
      for (const ClassicalAssignment& c : j_completions(v, j, atoms(f), bound)) {
        const bool left = eval_classical(c, f->left());
        const bool right = eval_classical(c, f->right());
        if (left || right)
          all_falsify_both = false;
        else
          all_satisfy = false;
      }
      if (all_satisfy) return Tri::T;
      if (all_falsify_both) return Tri::F;
      return Tri::O;
    }
  }
  return Tri::O;
}

Tri eval_supervaluation(const Valuation& v, const FormulaPtr& f, const TimePoint& j,
                        std::size_t bound) {
  if (j.is_always()) throw std::invalid_argument("query moment must not be ALWAYS");
  return supervaluate(v, f, j, bound);
}

Settlement settlement(const Valuation& v, const FormulaPtr& f, std::size_t bound) {
  // The value can change only where the settled-atom set changes, i.e. at
  // the finite settlement moments of atoms(f). Probe strictly below the
  // lowest finite moment, then each moment in order.
  std::vector<Rational> moments;
  for (const auto& name : atoms(f)) {
    const TimePoint& s = v.timeline(name).settles_at;
    if (!s.is_always()) moments.push_back(s.moment());
  }
  std::sort(moments.begin(), moments.end());
  moments.erase(std::unique(moments.begin(), moments.end()), moments.end());

  const Rational low_probe = moments.empty() ? Rational(0) : moments.front() - Rational(1);
  const Tri at_low = eval_recursive(v, f, low_probe, bound);
  if (at_low != Tri::O) return {TimePoint::always(), at_low == Tri::T};
  for (const Rational& m : moments) {
    const Tri value = eval_recursive(v, f, m, bound);
    if (value != Tri::O) return {TimePoint(m), value == Tri::T};
  }
  // Unreachable: by weak bivalence the last settlement moment decides f.
  throw std::logic_error("formula never settles");
}

Trajectory trajectory(const Valuation& v, const FormulaPtr& f,
                      const std::vector<TimePoint>& probes, std::size_t bound) {
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i].is_always()) throw std::invalid_argument("probe must not be ALWAYS");
    if (i > 0 && !(probes[i - 1] < probes[i]))
      throw std::invalid_argument("probes must be strictly increasing");
  }
  Trajectory t;
  t.points.reserve(probes.size());
  for (const TimePoint& p : probes) t.points.emplace_back(p, eval_recursive(v, f, p, bound));
  return t;
}

}  // namespace di9
