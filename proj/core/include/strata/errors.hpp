#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Base class for everything the workbench can throw on bad input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dimension / composability violations (matrix shapes, path endpoints).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// Text that does not conform to one of the file grammars.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Structurally well-formed input that violates a semantic contract
// (mismatched labels, missing spaces, bad axiom references).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

// Domain restrictions (n out of the supported range).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace strata
