#pragma once

#include <stdexcept>
#include <string>

namespace orbitcalc {

// Base class for every failure the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, JSON or file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition
// (ring mismatch, non-invariant field, singular matrix, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

// A long computation observed a stop request.
class Cancelled : public Error {
 public:
  Cancelled() : Error("computation cancelled") {}
};

}  // namespace orbitcalc
