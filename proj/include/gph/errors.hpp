#ifndef GPH_ERRORS_HPP
#define GPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gph {

// Input file could not be read or is not structurally valid JSON for the
// expected schema.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A graph, morphism or certificate violates a representation invariant
// (dangling endpoints, non-commuting maps, malformed step).
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// A checked operation was invoked on inputs outside its stated domain
// (e.g. a divisibility check on a morphism that is not a covering).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Certificate replay produced a graph different from the recorded one.
struct ReplayMismatch : std::runtime_error {
  explicit ReplayMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

// Two independent computations of the same quantity disagreed. This is
// never a data error: it means the library itself is broken, so callers
// should not catch it.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace gph

#endif  // GPH_ERRORS_HPP
