#ifndef DI9_CONSEQUENCE_HPP
#define DI9_CONSEQUENCE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "di9/formula.hpp"
#include "di9/rational.hpp"
#include "di9/trivalent.hpp"
#include "di9/world.hpp"

namespace di9 {

struct ConsequenceVerdict {
  bool holds;
  // When holds is false: a world and moment at which every premise is T and
  // the conclusion is not T.
  std::optional<std::pair<Valuation, TimePoint>> countermodel;
};

/// True iff the formula is T in world v at moment j.
bool satisfies(const Valuation& v, const FormulaPtr& f, const TimePoint& j,
               std::size_t bound = kDefaultAtomBound);

/// Decides trivalent logical consequence by the classical reduction: the
/// verdict equals tautological consequence, and a failing verdict carries
/// the classical countermodel lifted to a constant world, witnessed at
/// moment 0.
ConsequenceVerdict di9_consequence(const std::vector<FormulaPtr>& premises,
                                   const FormulaPtr& conclusion,
                                   std::size_t bound = kDefaultAtomBound);

ConsequenceVerdict di9_logical_truth(const FormulaPtr& f, std::size_t bound = kDefaultAtomBound);

struct SearchParams {
  std::uint64_t seed = 1;
  int iterations = 2000;
  // Settlement moments are drawn from [settle_lo, settle_hi] (small
  // denominators), probe moments from [probe_lo, probe_hi].
  Rational settle_lo{-10};
  Rational settle_hi{10};
  Rational probe_lo{-12};
  Rational probe_hi{12};
  double always_weight = 0.25;
};

/// Randomized search for a world/moment where every premise is T and the
/// conclusion is not T. Independent falsification evidence for the
/// classical reduction in di9_consequence; returns the first witness found
/// or nullopt after the iteration budget.
std::optional<std::pair<Valuation, TimePoint>> bounded_refutation_search(
    const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion,
    const SearchParams& params);

}  // namespace di9

#endif
