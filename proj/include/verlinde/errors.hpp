#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Bad user input: unsupported group, malformed weight, violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cost guard declined the request (rank or size limits).
class ComputationRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold failed. Always a bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace verlinde
