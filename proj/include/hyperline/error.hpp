#pragma once

#include <stdexcept>
#include <string>

namespace hyperline {

// Caller passed something outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard or search budget was exceeded; the question itself is still open.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven identity failed to hold. Always a bug or a violated precondition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested object provably does not exist (e.g. k does not divide d*N).
class UnrealizableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hyperline
