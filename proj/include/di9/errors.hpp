#ifndef DI9_ERRORS_HPP
#define DI9_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace di9 {

// Malformed formula or world-file text. `position` is a byte offset for
// formula text and a 1-based line number for world files.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position(position) {}
  std::size_t position;
};

struct UndeclaredAtomError : std::runtime_error {
  explicit UndeclaredAtomError(const std::string& atom)
      : std::runtime_error("undeclared atom: " + atom), atom(atom) {}
  std::string atom;
};

struct DuplicateAtomError : std::runtime_error {
  explicit DuplicateAtomError(const std::string& atom)
      : std::runtime_error("duplicate atom declaration: " + atom), atom(atom) {}
  std::string atom;
};

struct BoundExceededError : std::runtime_error {
  BoundExceededError(std::size_t requested, std::size_t bound)
      : std::runtime_error("enumeration over " + std::to_string(requested) +
                           " atoms exceeds bound " + std::to_string(bound)),
        requested(requested),
        bound(bound) {}
  std::size_t requested;
  std::size_t bound;
};

struct MismatchedAtomsError : std::runtime_error {
  MismatchedAtomsError() : std::runtime_error("valuations declare different atom sets") {}
};

}  // namespace di9

#endif
