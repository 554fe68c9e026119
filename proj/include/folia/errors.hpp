#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Base of every error the toolkit raises on purpose. Anything else escaping
// a public call is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class DocumentError : public Error {
 public:
  using Error::Error;
};

// The zero locus of a system is not a finite set of points.
class NonIsolatedError : public Error {
 public:
  using Error::Error;
};

// A precondition of a geometric or dynamical check is not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to produce a trustworthy answer.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Arithmetic invariant broken; signals a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace folia
