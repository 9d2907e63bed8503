#ifndef DI9_TRIVALENT_HPP
#define DI9_TRIVALENT_HPP

#include <utility>
#include <vector>

#include "di9/classical.hpp"
#include "di9/formula.hpp"
#include "di9/tri.hpp"
#include "di9/world.hpp"

namespace di9 {

/// The bivalent assignment a world eventually realizes: each atom maps to
/// its timeline's final value.
ClassicalAssignment induced_classical(const Valuation& v, const std::vector<std::string>& atom_names);

/// The recursive trivalent evaluator. Atoms read the timeline; negation
/// swaps T and F and preserves O; a disjunction is T (F) iff every
/// completion of the facts settled by j classically satisfies (falsifies
/// both sides of) it, and O otherwise.
Tri eval_recursive(const Valuation& v, const FormulaPtr& f, const TimePoint& j,
                   std::size_t bound = kDefaultAtomBound);

/// Independent whole-formula oracle: classically evaluate f under every
/// completion at j; T if all true, F if all false, O otherwise. Shares no
/// recursion with eval_recursive, so their agreement is a genuine
/// cross-check.
Tri eval_supervaluation(const Valuation& v, const FormulaPtr& f, const TimePoint& j,
                        std::size_t bound = kDefaultAtomBound);

struct Settlement {
  TimePoint moment;  // ALWAYS when the formula has its value from eternity
  bool value;        // true = T

  friend bool operator==(const Settlement&, const Settlement&) = default;
};

/// Earliest moment at which f carries a truth value, and that value.
/// Total: a result always exists.
Settlement settlement(const Valuation& v, const FormulaPtr& f,
                      std::size_t bound = kDefaultAtomBound);

struct Trajectory {
  std::vector<std::pair<TimePoint, Tri>> points;
};

/// eval_recursive readout at each probe; probes must be strictly increasing
/// and none ALWAYS.
Trajectory trajectory(const Valuation& v, const FormulaPtr& f,
                      const std::vector<TimePoint>& probes,
                      std::size_t bound = kDefaultAtomBound);

}  // namespace di9

#endif
