#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symquot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    if (column > 0) out += "column " + std::to_string(column) + ": ";
    return out + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Structurally valid input that violates a precondition (shape, conductor,
/// invertibility, unknown catalog name).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Group enumeration passed the configured order bound.
class OrderExceededError : public InputError {
 public:
  explicit OrderExceededError(std::size_t bound)
      : InputError("group order exceeds bound " + std::to_string(bound)),
        bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// An identity that must hold by construction failed. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symquot
