#pragma once

#include <stdexcept>
#include <string>

namespace nnelast {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTet : public Error {
 public:
  using Error::Error;
};

class SingularDofMatrix : public Error {
 public:
  using Error::Error;
};

class NonConformingMesh : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class SolverBreakdown : public Error {
 public:
  using Error::Error;
};

class ToleranceNotReached : public Error {
 public:
  ToleranceNotReached(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nnelast
