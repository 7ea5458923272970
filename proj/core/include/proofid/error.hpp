#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proofid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text. `position` is a zero-based byte offset into the input.
struct SyntaxError : Error {
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

// Ill-typed term. `path` locates the offending subterm from the root,
// e.g. "root.comp.g" or "root.pair.f".
struct TypeError : Error {
  TypeError(const std::string& message, std::string path)
      : Error(message + " (at " + path + ")"), path(std::move(path)) {}
  std::string path;
};

// A constructor or connective outside the declared fragment.
struct FragmentError : Error {
  using Error::Error;
};

// Unification clash or occurs-check failure.
struct UnificationError : Error {
  using Error::Error;
};

// An enumeration or search exceeded its configured hard cap.
struct BoundError : Error {
  using Error::Error;
};

// Operation precondition violated (e.g. a seed that is already a theorem).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace proofid
