#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrangeproj {

// Base for every error this library raises on bad input.
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

class RangeError : public ParseError {
public:
  using ParseError::ParseError;
};

class DuplicateEdge : public ParseError {
public:
  using ParseError::ParseError;
};

class NotNUI : public Error {
public:
  NotNUI() : Error("graph is not a natural unit interval graph") {}
};

class InvalidCVector : public Error {
public:
  using Error::Error;
};

// The supplied point fails the inequality system a computation requires.
class InvalidPoint : public Error {
public:
  using Error::Error;
};

// Two candidate faces tie at the minimal squared distance.
class NonGenericPoint : public Error {
public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
public:
  using Error::Error;
};

class CeilingExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace arrangeproj
