#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsmooth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MismatchedArity : public Error {
 public:
  using Error::Error;
};

class NonDiagonalTail : public Error {
 public:
  using Error::Error;
};

class ZeroSlope : public Error {
 public:
  using Error::Error;
};

class ZeroLambda : public Error {
 public:
  using Error::Error;
};

class ZeroQuadCoeff : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SingularAutMatrix : public Error {
 public:
  using Error::Error;
};

class BadCharacteristic : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class RewriteError : public Error {
 public:
  using Error::Error;
};

/// Parse failure at a 1-based line and column.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class DuplicatePair : public Error {
 public:
  using Error::Error;
};

}  // namespace dsmooth
