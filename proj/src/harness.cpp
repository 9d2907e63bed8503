#include "di9/harness.hpp"

#include <algorithm>
#include <functional>

#include "di9/classical.hpp"
#include "di9/consequence.hpp"
#include "di9/trivalent.hpp"

namespace di9 {

Rational gen_rational(Rng& rng, const Rational& lo, const Rational& hi) {
  const std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
  // Smallest and largest numerators n with lo <= n/den <= hi.
  const auto ceil_div = [](std::int64_t a, std::int64_t b) {
    return a / b + ((a % b != 0 && (a < 0) == (b < 0)) ? 1 : 0);
  };
  const auto floor_div = [](std::int64_t a, std::int64_t b) {
    return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
  };
  const std::int64_t lo_num = ceil_div(lo.num() * den, lo.den());
  const std::int64_t hi_num = floor_div(hi.num() * den, hi.den());
  const std::int64_t num =
      std::uniform_int_distribution<std::int64_t>(std::min(lo_num, hi_num),
                                                  std::max(lo_num, hi_num))(rng);
  return Rational(num, den);
}

namespace {

std::vector<std::string> atom_pool(int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

FormulaPtr gen_formula_rec(Rng& rng, const std::vector<std::string>& pool, int depth) {
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(pool.size()) - 1);
  if (depth <= 0) return Formula::atom(pool[pick_atom(rng)]);
  // Weighted mix: atom 2, not 3, or 3, and 2, implies 2, iff 1.
  const int roll = std::uniform_int_distribution<int>(0, 12)(rng);
  if (roll < 2) return Formula::atom(pool[pick_atom(rng)]);
  if (roll < 5) return Formula::negation(gen_formula_rec(rng, pool, depth - 1));
  auto left = gen_formula_rec(rng, pool, depth - 1);
  auto right = gen_formula_rec(rng, pool, depth - 1);
  if (roll < 8) return Formula::disjunction(std::move(left), std::move(right));
  if (roll < 10) return Formula::conjunction(std::move(left), std::move(right));
  if (roll < 12) return Formula::implication(std::move(left), std::move(right));
  return Formula::biconditional(std::move(left), std::move(right));
}

AtomTimeline gen_timeline(Rng& rng, const GenParams& params) {
  const bool from_eternity =
      std::uniform_real_distribution<double>(0.0, 1.0)(rng) < params.always_weight;
  const bool value = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  if (from_eternity) return {TimePoint::always(), value};
  return {TimePoint(gen_rational(rng, params.settle_lo, params.settle_hi)), value};
}

}  // namespace

FormulaPtr gen_formula(Rng& rng, const GenParams& params) {
  const int atom_count = std::uniform_int_distribution<int>(1, params.max_atoms)(rng);
  const int depth = std::uniform_int_distribution<int>(0, params.max_depth)(rng);
  return gen_formula_rec(rng, atom_pool(atom_count), depth);
}

Valuation gen_valuation(Rng& rng, const std::vector<std::string>& atom_names,
                        const GenParams& params) {
  Valuation v;
  for (const auto& name : atom_names) v.declare(name, gen_timeline(rng, params));
  return v;
}

Valuation gen_j_extension(Rng& rng, const Valuation& a, const TimePoint& j,
                          const GenParams& params) {
  Valuation b;
  for (const auto& [name, tl] : a) {
    if (tl.settles_at <= j) {
      b.declare(name, tl);
      continue;
    }
    // Re-draw with settlement strictly after j.
    AtomTimeline fresh = gen_timeline(rng, params);
    Rational moment = fresh.settles_at.is_always() ? params.settle_hi : fresh.settles_at.moment();
    if (TimePoint(moment) <= j) moment = j.moment() + gen_rational(rng, Rational(1, 4), Rational(4));
    b.declare(name, {TimePoint(moment), fresh.final_value});
  }
  return b;
}

int PropertyReport::total_failures() const {
  int total = 0;
  for (const auto& p : properties) total += p.failures;
  return total;
}

std::string PropertyReport::render_machine() const {
  std::string out;
  for (const auto& p : properties) {
    out += "property=" + p.name + " cases=" + std::to_string(p.cases) +
           " failures=" + std::to_string(p.failures) + "\n";
  }
  return out;
}

std::string PropertyReport::render_text() const {
  std::string out = render_machine();
  for (const auto& p : properties) {
    for (const auto& ce : p.counterexamples) {
      out += "--- counterexample for " + p.name + " ---\n" + ce;
      if (out.back() != '\n') out += '\n';
    }
  }
  return out;
}

namespace {

struct Recorder {
  PropertyResult result;
  static constexpr int kMaxCounterexamples = 5;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void record(bool ok, const std::function<std::string()>& render_counterexample) {
    ++result.cases;
    if (ok) return;
    ++result.failures;
    if (static_cast<int>(result.counterexamples.size()) < kMaxCounterexamples)
      result.counterexamples.push_back(render_counterexample());
  }
};

std::string describe(const Valuation& v, const FormulaPtr& f, const TimePoint& j) {
  return "world:\n" + render_world(v) + "formula: " + render(f) + "\nmoment: " + j.str() + "\n";
}

// Best-effort shrink: replace the formula by an immediate subformula as long
// as the failure predicate keeps holding.
FormulaPtr shrink_formula(FormulaPtr f, const std::function<bool(const FormulaPtr&)>& fails) {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    std::vector<FormulaPtr> candidates;
    switch (f->kind()) {
      case Formula::Kind::Atom:
        break;
      case Formula::Kind::Not:
        candidates.push_back(f->operand());
        break;
      case Formula::Kind::Or:
        candidates.push_back(f->left());
        candidates.push_back(f->right());
        break;
    }
    for (const auto& c : candidates) {
      if (fails(c)) {
        f = c;
        progressed = true;
        break;
      }
    }
  }
  return f;
}

// A moment strictly above every settlement moment of the declared atoms.
TimePoint late_moment(const Valuation& v) {
  Rational late(0);
  for (const auto& [name, tl] : v)
    if (!tl.settles_at.is_always() && tl.settles_at.moment() >= late)
      late = tl.settles_at.moment() + Rational(1);
  return TimePoint(late);
}

}  // namespace

PropertyReport run_suite(const GenParams& params) {
  Rng rng(params.seed);
  Recorder p1("prop1_j_extension_agreement");
  Recorder p2("prop2_induced_classical_matches_eventual_value");
  Recorder p3("prop3_settlement_total");
  Recorder p4("prop4_persistence");
  Recorder p5("prop5_recursive_equals_supervaluation");
  Recorder p6("prop6_prop8_consequence_coextensive");
  Recorder p7("prop7_lifted_worlds_constant_classical");
  Recorder p9("prop9_logical_truth_equals_tautology");
  Recorder d1("def1_atom_persistence_and_weak_bivalence");

  for (int i = 0; i < params.iterations; ++i) {
    const FormulaPtr f = gen_formula(rng, params);
    const std::vector<std::string> names = atoms(f);
    const Valuation v = gen_valuation(rng, names, params);
    const TimePoint j{gen_rational(rng, params.probe_lo, params.probe_hi)};
    const TimePoint h{gen_rational(rng, j.moment(), params.probe_hi)};  // j <= h

    // Definition 1 on generated timelines: persistence across j < h and
    // eventual decision.
    d1.record(
        [&] {
          for (const auto& name : names) {
            const Tri early = atom_value_at(v, name, j);
            const Tri later = atom_value_at(v, name, h);
            if (early != Tri::O && j < h && later != early) return false;
            if (atom_value_at(v, name, late_moment(v)) == Tri::O) return false;
          }
          return true;
        }(),
        [&] { return describe(v, f, j); });

    // Proposition 5: the two evaluators agree everywhere.
    {
      const auto disagrees = [&](const FormulaPtr& g) {
        return eval_recursive(v, g, j) != eval_supervaluation(v, g, j);
      };
      const bool ok = !disagrees(f);
      p5.record(ok, [&] {
        const FormulaPtr small = shrink_formula(f, disagrees);
        return describe(v, small, j);
      });
    }

    // Proposition 4: a truth value at j persists to h.
    {
      const Tri at_j = eval_recursive(v, f, j);
      const Tri at_h = eval_recursive(v, f, h);
      p4.record(at_j == Tri::O || at_j == at_h, [&] { return describe(v, f, j) + "later: " + h.str() + "\n"; });
    }

    // Proposition 3: settlement is total and yields a truth value.
    {
      bool ok = true;
      try {
        (void)settlement(v, f);
      } catch (...) {
        ok = false;
      }
      p3.record(ok, [&] { return describe(v, f, j); });
    }

    // Proposition 2: the induced classical value is the eventual value.
    {
      const TimePoint late = late_moment(v);
      const auto mismatches = [&](const FormulaPtr& g) {
        const bool classical = eval_classical(induced_classical(v, names), g);
        return eval_recursive(v, g, late) != tri_of(classical);
      };
      p2.record(!mismatches(f), [&] {
        return describe(v, shrink_formula(f, mismatches), late);
      });
    }

    // Proposition 1: a j-extension agrees at every h' <= j.
    {
      const Valuation b = gen_j_extension(rng, v, j, params);
      bool ok = is_j_extension(b, v, j);
      if (ok) {
        for (int k = 0; k < 3 && ok; ++k) {
          const TimePoint probe{gen_rational(rng, params.probe_lo, j.moment())};
          ok = eval_recursive(v, f, probe) == eval_recursive(b, f, probe);
        }
        ok = ok && eval_recursive(v, f, j) == eval_recursive(b, f, j);
      }
      p1.record(ok, [&] { return describe(v, f, j) + "extension:\n" + render_world(b); });
    }

    // Proposition 7: lifted classical worlds are moment-constant and agree
    // with the classical value.
    {
      const ClassicalAssignment ic = induced_classical(v, names);
      const Valuation lifted = lift_classical(ic);
      const bool classical = eval_classical(ic, f);
      const bool ok = eval_recursive(lifted, f, j) == tri_of(classical) &&
                      eval_recursive(lifted, f, h) == tri_of(classical);
      p7.record(ok, [&] { return describe(lifted, f, j); });
    }

    // Consequence-level checks on a reduced budget (they enumerate truth
    // tables and run refutation searches).
    if (i % 5 == 0) {
      // Proposition 9 corollary.
      {
        const ConsequenceVerdict verdict = di9_logical_truth(f);
        bool ok = verdict.holds == is_tautology(f);
        if (ok && !verdict.holds) {
          const auto& [world, moment] = *verdict.countermodel;
          ok = eval_recursive(world, f, moment) == Tri::F;
        }
        p9.record(ok, [&] { return describe(v, f, j); });
      }
      // Propositions 6 and 8: the decided verdict never contradicts the
      // randomized search, and failing verdicts re-check.
      {
        std::vector<FormulaPtr> premises;
        const int premise_count = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < premise_count; ++k) premises.push_back(gen_formula(rng, params));
        const FormulaPtr conclusion = gen_formula(rng, params);
        const ConsequenceVerdict verdict = di9_consequence(premises, conclusion);
        SearchParams sp;
        sp.seed = rng();
        sp.iterations = 30;
        const auto witness = bounded_refutation_search(premises, conclusion, sp);
        bool ok;
        if (verdict.holds) {
          ok = !witness.has_value();
        } else {
          const auto& [world, moment] = *verdict.countermodel;
          ok = !satisfies(world, conclusion, moment);
          for (const auto& p : premises) ok = ok && satisfies(world, p, moment);
        }
        p6.record(ok, [&] {
          std::string out = "conclusion: " + render(conclusion) + "\n";
          for (const auto& p : premises) out += "premise: " + render(p) + "\n";
          return out;
        });
      }
    }
  }

  PropertyReport report;
  report.properties = {p1.result, p2.result, p3.result, p4.result, p5.result,
                       p6.result, p7.result, p9.result, d1.result};
  return report;
}

}  // namespace di9
