#pragma once

#include <stdexcept>
#include <string>

namespace dyer {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in the .dyer text format. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Semantic violation: duplicate vertex, unknown vertex, label out of range,
// Dyer-condition violation, malformed induced-subgraph request.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive procedure (coset enumeration, subset enumeration) exceeded
// its configured cap. Callers distinguish this from a wrong answer.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace dyer
