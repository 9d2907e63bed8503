#ifndef DI9_HARNESS_HPP
#define DI9_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "di9/formula.hpp"
#include "di9/rational.hpp"
#include "di9/world.hpp"

namespace di9 {

struct GenParams {
  int max_atoms = 6;
  int max_depth = 6;
  Rational settle_lo{-10};
  Rational settle_hi{10};
  double always_weight = 0.25;  // probability a timeline settles from eternity
  Rational probe_lo{-12};
  Rational probe_hi{12};
  std::uint64_t seed = 20260101;
  int iterations = 10000;
};

using Rng = std::mt19937_64;

/// Random rational in [lo, hi] with a small denominator.
Rational gen_rational(Rng& rng, const Rational& lo, const Rational& hi);

/// Random formula over at most params.max_atoms atoms (named p1, p2, ...),
/// depth at most params.max_depth before desugaring. The constructor mix
/// includes the sugar connectives, desugared on the fly.
FormulaPtr gen_formula(Rng& rng, const GenParams& params);

/// Random world declaring exactly the given atoms.
Valuation gen_valuation(Rng& rng, const std::vector<std::string>& atom_names,
                        const GenParams& params);

/// Random j-extension of a: timelines settled at or before j are copied,
/// the rest are re-drawn with settlement strictly after j.
Valuation gen_j_extension(Rng& rng, const Valuation& a, const TimePoint& j,
                          const GenParams& params);

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> counterexamples;  // rendered world/formula/moments
};

struct PropertyReport {
  std::vector<PropertyResult> properties;

  int total_failures() const;
  std::string render_text() const;
  /// One line per property: property=<name> cases=<n> failures=<k>
  std::string render_machine() const;
};

/// Runs the whole randomized property suite; deterministic per seed.
PropertyReport run_suite(const GenParams& params);

}  // namespace di9

#endif
