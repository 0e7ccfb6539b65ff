#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An enumeration or construction would exceed the configured chamber cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A residue or gallery needed by an operation leaves the radius-k ball.
class TruncatedError : public Error {
 public:
  using Error::Error;
};

// A chamber system violates the building axioms. The message names a witness.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// Invalid arguments: not star-like, not a morphism, chooser outside its panel,
// thickness violation, mismatched systems.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree by a theorem disagree. Never expected.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Chamber/element cap; RAB_MAX_CHAMBERS overrides the default of 5e6.
std::size_t resource_cap();

}  // namespace rab
