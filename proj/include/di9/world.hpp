#ifndef DI9_WORLD_HPP
#define DI9_WORLD_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "di9/classical.hpp"
#include "di9/rational.hpp"
#include "di9/tri.hpp"

namespace di9 {

/// Per-atom settlement record: the atom's value is O strictly before
/// settles_at and final_value from settles_at onward. Persistence and weak
/// bivalence hold by construction.
struct AtomTimeline {
  TimePoint settles_at;
  bool final_value;  // true = T

  friend bool operator==(const AtomTimeline&, const AtomTimeline&) = default;
};

/// A possible world: one timeline per declared atom.
class Valuation {
 public:
  void declare(std::string atom, AtomTimeline timeline);  // throws DuplicateAtomError
  const AtomTimeline& timeline(const std::string& atom) const;
  bool contains(const std::string& atom) const { return timelines_.count(atom) != 0; }
  std::size_t size() const { return timelines_.size(); }
  std::vector<std::string> atom_names() const;

  auto begin() const { return timelines_.begin(); }
  auto end() const { return timelines_.end(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, AtomTimeline> timelines_;
};

/// Value of a declared atom at an actual moment (t must not be ALWAYS).
Tri atom_value_at(const Valuation& v, const std::string& atom, const TimePoint& t);

/// True iff b agrees with a at every moment h <= j, for every declared atom.
/// Both valuations must declare the same atom set; j must not be ALWAYS.
bool is_j_extension(const Valuation& b, const Valuation& a, const TimePoint& j);

/// All bivalent assignments over `atom_names` that fix atoms settled at or
/// before j to their final values and range freely over the rest. These are
/// exactly the classical interpretations induced by j-extensions of v.
std::vector<ClassicalAssignment> j_completions(const Valuation& v, const TimePoint& j,
                                               const std::vector<std::string>& atom_names,
                                               std::size_t bound = kDefaultAtomBound);

/// The constant world agreeing with ic at every moment: every timeline is
/// (ALWAYS, ic(atom)).
Valuation lift_classical(const ClassicalAssignment& ic);

/// World-file format, one directive per line:
///   atom <name> settles <rational|always> <T|F>
/// '#' starts a comment; blank lines are ignored. Errors carry line numbers.
Valuation parse_world(std::string_view text);
std::string render_world(const Valuation& v);

}  // namespace di9

#endif
