#pragma once

#include <stdexcept>
#include <string>

namespace zsplines {

// Raised when graph input or operation arguments violate a documented
// precondition (bad index, unknown vertex, ragged matrix, ...).
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVertexError : public InvalidArgumentError {
 public:
  explicit UnknownVertexError(const std::string& what) : InvalidArgumentError(what) {}
};

class NotMultipleError : public InvalidArgumentError {
 public:
  explicit NotMultipleError(const std::string& what) : InvalidArgumentError(what) {}
};

class DimensionMismatchError : public InvalidArgumentError {
 public:
  explicit DimensionMismatchError(const std::string& what) : InvalidArgumentError(what) {}
};

// Enumeration oracle refused to run: candidate space exceeds the budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration oracle cannot handle zero labels; use the kernel oracle.
class ZeroLabelError : public std::runtime_error {
 public:
  explicit ZeroLabelError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant that the reduction calculus guarantees was violated;
// indicates a bug in this library, not bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zsplines
