#pragma once

#include <stdexcept>
#include <string>

namespace catgsb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse or validation failure with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Violation of an internal invariant (strict descent, composition bound).
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what)
      : Error("internal invariant violated: " + what) {}
};

}  // namespace catgsb
