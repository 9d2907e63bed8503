#include "di9/consequence.hpp"

#include <set>

#include "di9/classical.hpp"
#include "di9/harness.hpp"

namespace di9 {

bool satisfies(const Valuation& v, const FormulaPtr& f, const TimePoint& j, std::size_t bound) {
  return eval_recursive(v, f, j, bound) == Tri::T;
}

ConsequenceVerdict di9_consequence(const std::vector<FormulaPtr>& premises,
                                   const FormulaPtr& conclusion, std::size_t bound) {
  const TautConsequence classical = tautological_consequence(premises, conclusion, bound);
  if (classical.holds) return {true, std::nullopt};
  return {false, std::pair{lift_classical(*classical.countermodel), TimePoint(Rational(0))}};
}

ConsequenceVerdict di9_logical_truth(const FormulaPtr& f, std::size_t bound) {
  return di9_consequence({}, f, bound);
}

std::optional<std::pair<Valuation, TimePoint>> bounded_refutation_search(
    const std::vector<FormulaPtr>& premises, const FormulaPtr& conclusion,
    const SearchParams& params) {
  std::set<std::string> names;
  for (const auto& p : premises)
    for (auto& a : atoms(p)) names.insert(std::move(a));
  for (auto& a : atoms(conclusion)) names.insert(std::move(a));
  const std::vector<std::string> atom_names(names.begin(), names.end());

  GenParams gen;
  gen.settle_lo = params.settle_lo;
  gen.settle_hi = params.settle_hi;
  gen.probe_lo = params.probe_lo;
  gen.probe_hi = params.probe_hi;
  gen.always_weight = params.always_weight;

  Rng rng(params.seed);
  for (int i = 0; i < params.iterations; ++i) {
    const Valuation world = gen_valuation(rng, atom_names, gen);
    const TimePoint moment{gen_rational(rng, params.probe_lo, params.probe_hi)};
    bool premises_hold = true;
    for (const auto& p : premises)
      if (!satisfies(world, p, moment)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !satisfies(world, conclusion, moment)) return std::pair{world, moment};
  }
  return std::nullopt;
}

}  // namespace di9
