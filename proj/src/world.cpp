#include "di9/world.hpp"

#include <sstream>

#include "di9/errors.hpp"

namespace di9 {

void Valuation::declare(std::string atom, AtomTimeline timeline) {
  const auto [it, inserted] = timelines_.emplace(std::move(atom), timeline);
  if (!inserted) throw DuplicateAtomError(it->first);
}

const AtomTimeline& Valuation::timeline(const std::string& atom) const {
  const auto it = timelines_.find(atom);
  if (it == timelines_.end()) throw UndeclaredAtomError(atom);
  return it->second;
}

std::vector<std::string> Valuation::atom_names() const {
  std::vector<std::string> names;
  names.reserve(timelines_.size());
  for (const auto& [name, tl] : timelines_) names.push_back(name);
  return names;
}

Tri atom_value_at(const Valuation& v, const std::string& atom, const TimePoint& t) {
  if (t.is_always()) throw std::invalid_argument("query moment must not be ALWAYS");
  const AtomTimeline& tl = v.timeline(atom);
  if (t >= tl.settles_at) return tri_of(tl.final_value);
  return Tri::O;
}

bool is_j_extension(const Valuation& b, const Valuation& a, const TimePoint& j) {
  if (j.is_always()) throw std::invalid_argument("j must not be ALWAYS");
  if (a.size() != b.size()) throw MismatchedAtomsError();
  for (const auto& [name, tla] : a) {
    if (!b.contains(name)) throw MismatchedAtomsError();
    const AtomTimeline& tlb = b.timeline(name);
    const bool a_settled = tla.settles_at <= j;
    const bool b_settled = tlb.settles_at <= j;
    if (a_settled != b_settled) return false;
    // Settled on both sides: timelines must coincide throughout (-inf, j],
    // i.e. same settlement moment and same value. Unsettled on both sides:
    // both are O throughout (-inf, j].
    if (a_settled && tla != tlb) return false;
  }
  return true;
}

std::vector<ClassicalAssignment> j_completions(const Valuation& v, const TimePoint& j,
                                               const std::vector<std::string>& atom_names,
                                               std::size_t bound) {
  if (j.is_always()) throw std::invalid_argument("j must not be ALWAYS");
  std::vector<std::string> free_atoms;
  ClassicalAssignment fixed;
  for (const auto& name : atom_names) {
    const AtomTimeline& tl = v.timeline(name);
    if (tl.settles_at <= j)
      fixed.set(name, tl.final_value);
    else
      free_atoms.push_back(name);
  }
  std::vector<ClassicalAssignment> out = all_assignments(free_atoms, bound);
  for (auto& a : out)
    for (const auto& [name, value] : fixed) a.set(name, value);
  return out;
}

Valuation lift_classical(const ClassicalAssignment& ic) {
  Valuation v;
  for (const auto& [name, value] : ic) v.declare(name, {TimePoint::always(), value});
  return v;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(std::move(w));
  return words;
}

}  // namespace

Valuation parse_world(std::string_view text) {
  Valuation v;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    if (words.size() != 5 || words[0] != "atom" || words[2] != "settles")
      throw ParseError("expected 'atom <name> settles <rational|always> <T|F>'", line_no);
    TimePoint settles = TimePoint::always();
    try {
      settles = TimePoint::parse(words[3]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    bool value;
    if (words[4] == "T")
      value = true;
    else if (words[4] == "F")
      value = false;
    else
      throw ParseError("final value must be T or F, got '" + words[4] + "'", line_no);
    try {
      v.declare(words[1], {settles, value});
    } catch (const DuplicateAtomError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return v;
}

std::string render_world(const Valuation& v) {
  std::string out;
  for (const auto& [name, tl] : v) {
    out += "atom " + name + " settles " + tl.settles_at.str() + (tl.final_value ? " T" : " F");
    out += '\n';
  }
  return out;
}

}  // namespace di9
