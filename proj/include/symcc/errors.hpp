#ifndef SYMCC_ERRORS_HPP
#define SYMCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symcc {

// Malformed input or mismatched sizes. CLI exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the hypotheses of a formula. CLI exit code 3.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sheaf data that no implemented formula covers (wild ramification).
class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A brute-force oracle was asked for an input beyond its size guard.
class RefusalError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two routes to the same quantity disagreed, or an exact division left a
// remainder. Never recoverable. CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symcc

#endif  // SYMCC_ERRORS_HPP
