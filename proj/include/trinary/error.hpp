#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trinary {

/// Precondition violated by a value that is otherwise well formed
/// (base <= 1, negative weight, too few symbols, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic would exceed 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Malformed request shape, e.g. an empty or inverted sampling range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lexical or syntax error in a logic expression. `position` is the
/// zero-based byte offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation failure, e.g. a name with no binding.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trinary
