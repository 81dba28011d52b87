#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphdecomp {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument precondition was violated: unknown vertex, a set that is not
/// a subset of the graph's vertices, overlapping sets, and the like.
struct DomainError : Error {
  using Error::Error;
};

/// Input text could not be parsed. Positions are 1-based.
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  std::size_t line = 0;
  std::size_t column = 0;
};

/// A caller-supplied component (seed strategy, matching, ...) broke its
/// contract, or a result failed a postcondition check.
struct ContractViolation : Error {
  using Error::Error;
};

/// The operation would exceed its configured resource budget.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace graphdecomp
