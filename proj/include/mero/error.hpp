#pragma once

#include <stdexcept>
#include <string>

namespace mero {

// Base class for everything the workbench can throw.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two values live over different ground sets.
class GroundSetMismatch : public Error {
 public:
  using Error::Error;
};

// A raw family of subsets does not cover the ground set.
class NotACover : public Error {
 public:
  using Error::Error;
};

// generate() was called with no generating covers.
class EmptyGenerators : public Error {
 public:
  using Error::Error;
};

// An exhaustive operation was asked to run above its size gate.
class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

// enumerate_maps() would produce more maps than the fixed budget.
class MapBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input text; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mero
