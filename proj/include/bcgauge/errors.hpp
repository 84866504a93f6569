#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcg {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inversion or division hit a zero divisor (or zero).
struct null_cone_error : error {
  using error::error;
};

/// Operation not defined for this set representation (raw predicates).
struct unsupported_error : error {
  using error::error;
};

/// Bisection bracket search exhausted: the set does not absorb the point.
struct not_absorbed_error : error {
  using error::error;
};

/// Operand dimensions disagree.
struct dimension_error : error {
  using error::error;
};

/// A constructor was handed a non-finite or otherwise inadmissible value.
struct invalid_value_error : error {
  using error::error;
};

/// D-sup/D-inf over an empty collection.
struct empty_collection_error : error {
  using error::error;
};

/// Norm extraction from a set that is not bounded.
struct unbounded_error : error {
  using error::error;
};

/// Expression or configuration text could not be parsed.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace bcg
