#include "di9/classical.hpp"

#include <algorithm>
#include <set>

#include "di9/errors.hpp"

namespace di9 {

bool ClassicalAssignment::value(const std::string& atom) const {
  const auto it = values_.find(atom);
  if (it == values_.end()) throw UndeclaredAtomError(atom);
  return it->second;
}

bool eval_classical(const ClassicalAssignment& a, const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return a.value(f->name());
    case Formula::Kind::Not:
      return !eval_classical(a, f->operand());
    case Formula::Kind::Or: {
      // No short-circuit: undeclared atoms must surface regardless of the
      // left disjunct's value.
      const bool left = eval_classical(a, f->left());
      const bool right = eval_classical(a, f->right());
      return left || right;
    }
  }
  return false;
}

namespace detail {

CompiledFormula::CompiledFormula(const FormulaPtr& f, const std::vector<std::string>& atom_order) {
  compile(f, atom_order);
}

int CompiledFormula::compile(const FormulaPtr& f, const std::vector<std::string>& atom_order) {
  Node node;
  node.kind = f->kind();
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      const auto it = std::find(atom_order.begin(), atom_order.end(), f->name());
      if (it == atom_order.end()) throw UndeclaredAtomError(f->name());
      node.atom = static_cast<int>(it - atom_order.begin());
      break;
    }
    case Formula::Kind::Not:
      node.left = compile(f->operand(), atom_order);
      break;
    case Formula::Kind::Or:
      node.left = compile(f->left(), atom_order);
      node.right = compile(f->right(), atom_order);
      break;
  }
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

bool CompiledFormula::eval(std::uint64_t mask) const {
  // Children precede parents, so a single forward pass suffices.
  std::vector<bool> value(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Formula::Kind::Atom:
        value[i] = ((mask >> n.atom) & 1) == 0;
        break;
      case Formula::Kind::Not:
        value[i] = !value[n.left];
        break;
      case Formula::Kind::Or:
        value[i] = value[n.left] || value[n.right];
        break;
    }
  }
  return value.back();
}

ClassicalAssignment assignment_from_mask(const std::vector<std::string>& atom_order,
                                         std::uint64_t mask) {
  ClassicalAssignment a;
  for (std::size_t i = 0; i < atom_order.size(); ++i)
    a.set(atom_order[i], ((mask >> i) & 1) == 0);
  return a;
}

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound || n >= 63) throw BoundExceededError(n, bound);
}

std::vector<std::string> combined_atoms(const std::vector<FormulaPtr>& premises,
                                        const FormulaPtr& conclusion) {
  std::set<std::string> names;
  for (const auto& p : premises)
    for (auto& a : atoms(p)) names.insert(std::move(a));
  for (auto& a : atoms(conclusion)) names.insert(std::move(a));
  return {names.begin(), names.end()};
}

constexpr std::uint64_t kNoMask = ~std::uint64_t{0};

// Lowest mask where all premises hold and the conclusion fails, or kNoMask.
std::uint64_t scan_serial(const std::vector<detail::CompiledFormula>& premises,
                          const detail::CompiledFormula& conclusion, std::uint64_t count) {
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool premises_hold = true;
    for (const auto& p : premises)
      if (!p.eval(mask)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !conclusion.eval(mask)) return mask;
  }
  return kNoMask;
}

std::uint64_t scan_parallel(const std::vector<detail::CompiledFormula>& premises,
                            const detail::CompiledFormula& conclusion, std::uint64_t count) {
  std::uint64_t best = kNoMask;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(count); ++mask) {
    bool premises_hold = true;
    for (const auto& p : premises)
      if (!p.eval(mask)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !conclusion.eval(mask))
      best = std::min(best, static_cast<std::uint64_t>(mask));
  }
  return best;
}

TautConsequence consequence_impl(const std::vector<FormulaPtr>& premise_formulas,
                                 const FormulaPtr& conclusion, std::size_t bound, bool parallel) {
  const std::vector<std::string> names = combined_atoms(premise_formulas, conclusion);
  check_bound(names.size(), bound);
  std::vector<detail::CompiledFormula> premises;
  premises.reserve(premise_formulas.size());
  for (const auto& p : premise_formulas) premises.emplace_back(p, names);
  const detail::CompiledFormula goal(conclusion, names);
  const std::uint64_t count = std::uint64_t{1} << names.size();
  const std::uint64_t failing =
      parallel ? scan_parallel(premises, goal, count) : scan_serial(premises, goal, count);
  if (failing == kNoMask) return {true, std::nullopt};
  return {false, detail::assignment_from_mask(names, failing)};
}

}  // namespace
}  // namespace detail

std::vector<ClassicalAssignment> all_assignments(const std::vector<std::string>& atom_names,
                                                 std::size_t bound) {
  detail::check_bound(atom_names.size(), bound);
  const std::uint64_t count = std::uint64_t{1} << atom_names.size();
  std::vector<ClassicalAssignment> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    out.push_back(detail::assignment_from_mask(atom_names, mask));
  return out;
}

bool is_tautology(const FormulaPtr& f, std::size_t bound) {
  return detail::consequence_impl({}, f, bound, /*parallel=*/true).holds;
}

bool is_tautology_serial(const FormulaPtr& f, std::size_t bound) {
  return detail::consequence_impl({}, f, bound, /*parallel=*/false).holds;
}

TautConsequence tautological_consequence(const std::vector<FormulaPtr>& premises,
                                         const FormulaPtr& conclusion, std::size_t bound) {
  return detail::consequence_impl(premises, conclusion, bound, /*parallel=*/true);
}

TautConsequence tautological_consequence_serial(const std::vector<FormulaPtr>& premises,
                                                const FormulaPtr& conclusion, std::size_t bound) {
  return detail::consequence_impl(premises, conclusion, bound, /*parallel=*/false);
}

}  // namespace di9
