#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divisive {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: unknown agent or proposal, non-permutation, bad grammar.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two profiles being joined share an agent identifier.
class DisjointnessError : public InputError {
 public:
  using InputError::InputError;
};

/// A score or winner set was requested for an empty coalition.
class EmptyCoalitionError : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed the configured enumeration or integer budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace divisive
