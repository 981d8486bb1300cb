#pragma once

#include <stdexcept>
#include <string>

namespace deltacheck {

/// Caller violated a precondition (length mismatch, face not in complex, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation needs a full-dimensional polytope; normalize first.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lifting heights produced a non-simplicial lower-hull cell.
class NotGeneric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction could not be certified (e.g. no compatible pair triangulation).
class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Always an artifact bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace deltacheck
