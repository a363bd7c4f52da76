#pragma once

#include <stdexcept>
#include <string>

namespace prioritaire {

/// Raised when an operation's contract is violated by its caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact identity that must hold by construction fails.
/// Seeing one of these means a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A tree descent hit its configured depth cap.
class DepthExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point below the lower frontier was not covered by any triangle.
class NotCovered : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No prioritary sheaf exists with the requested invariants.
class NoPrioritarySheaf : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, surds, dyadics).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace prioritaire
