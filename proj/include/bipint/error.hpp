#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bipint {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid node id (index outside the side's range, or wrong side).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A link expected to exist is absent.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// A link expected to be absent already exists.
class DuplicateError : public Error {
 public:
  using Error::Error;
};

// Two projections over different node sets.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

class NoNonEdgesError : public Error {
 public:
  using Error::Error;
};

class CannotSwapError : public Error {
 public:
  using Error::Error;
};

class EmptyPopulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bipint
