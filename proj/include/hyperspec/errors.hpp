#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale resource guard refused the request (degree, endpoint count,
/// Macaulay dimension).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal mathematical consistency check failed. Seeing one of these
/// means a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The resultant of a system vanished identically.
class DegenerateResultant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two numerically computed roots were too close to trust the product formula.
class RepeatedRoots : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperspec
