#ifndef DI9_CLASSICAL_HPP
#define DI9_CLASSICAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "di9/formula.hpp"

namespace di9 {

inline constexpr std::size_t kDefaultAtomBound = 20;

/// Bivalent assignment, total on a declared finite atom set. Looking up an
/// undeclared atom throws UndeclaredAtomError.
class ClassicalAssignment {
 public:
  void set(std::string atom, bool value) { values_[std::move(atom)] = value; }
  bool value(const std::string& atom) const;
  bool contains(const std::string& atom) const { return values_.count(atom) != 0; }
  std::size_t size() const { return values_.size(); }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const ClassicalAssignment&, const ClassicalAssignment&) = default;

 private:
  std::map<std::string, bool> values_;
};

/// Standard bivalent recursion; every atom of f must be declared in a.
bool eval_classical(const ClassicalAssignment& a, const FormulaPtr& f);

/// All 2^|atoms| assignments, deterministic order (first element all-true).
std::vector<ClassicalAssignment> all_assignments(const std::vector<std::string>& atom_names,
                                                 std::size_t bound = kDefaultAtomBound);

struct TautConsequence {
  bool holds;
  std::optional<ClassicalAssignment> countermodel;  // premises T, conclusion F
};

// Truth-table scans. The unsuffixed versions split the assignment space
// across OpenMP threads; the _serial versions are the reference
// implementations the tests compare against. Both return identical results,
// including the countermodel (lowest enumeration index).
bool is_tautology(const FormulaPtr& f, std::size_t bound = kDefaultAtomBound);
bool is_tautology_serial(const FormulaPtr& f, std::size_t bound = kDefaultAtomBound);

TautConsequence tautological_consequence(const std::vector<FormulaPtr>& premises,
                                         const FormulaPtr& conclusion,
                                         std::size_t bound = kDefaultAtomBound);
TautConsequence tautological_consequence_serial(const std::vector<FormulaPtr>& premises,
                                                const FormulaPtr& conclusion,
                                                std::size_t bound = kDefaultAtomBound);

namespace detail {

/// Formula flattened against a fixed atom order for bitmask evaluation.
/// Bit i of a mask set means atom_order[i] is FALSE, so mask 0 is the
/// all-true assignment and ascending masks match all_assignments order.
class CompiledFormula {
 public:
  CompiledFormula(const FormulaPtr& f, const std::vector<std::string>& atom_order);

  bool eval(std::uint64_t mask) const;

 private:
  struct Node {
    Formula::Kind kind;
    int atom = -1;
    int left = -1;
    int right = -1;
  };
  int compile(const FormulaPtr& f, const std::vector<std::string>& atom_order);
  std::vector<Node> nodes_;  // children precede parents; back() is the root
};

ClassicalAssignment assignment_from_mask(const std::vector<std::string>& atom_order,
                                         std::uint64_t mask);

}  // namespace detail
}  // namespace di9

#endif
