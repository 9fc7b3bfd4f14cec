#pragma once

#include <stdexcept>
#include <string>

namespace dm1 {

// Malformed textual input (word strings, polygon expressions, JSON payloads).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity that is supposed to hold unconditionally failed.
// Reaching this means a bug or a genuine counterexample to a verified claim.
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dm1
