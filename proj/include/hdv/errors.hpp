#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdv {

/// Base class of every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed operation tables or files (wrong shape, out-of-range entries,
/// missing tables). Distinct from an axiom violation.
struct structure_error : error {
  using error::error;
};

/// Signature mismatch: two algebras of different classes, or an operation
/// that the class of an algebra does not provide.
struct class_error : error {
  using error::error;
};

/// Term syntax error. `position` is the byte offset into the source.
struct parse_error : error {
  parse_error(std::string const& msg, std::size_t pos)
      : error(msg + " at position " + std::to_string(pos)), message(msg), position(pos) {}
  std::string message;  // without the position suffix
  std::size_t position;
};

/// Term evaluation failure (unbound variable, unavailable operation).
struct eval_error : error {
  using error::error;
};

/// An internal consistency check failed: two routes that must agree by a
/// theorem did not. Always a bug or a counterexample, never user error.
struct theorem_violation : error {
  using error::error;
};

}  // namespace hdv
