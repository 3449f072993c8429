#pragma once

#include <stdexcept>
#include <string>

namespace xdecomp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cut side carries no demand information (d(S) = 0 or d(S) = d(V)).
struct DegenerateSide : Error {
  using Error::Error;
};

struct NotATree : Error {
  using Error::Error;
};

// Instance exceeds the brute-force oracle cap.
struct TooLarge : Error {
  using Error::Error;
};

struct Disconnected : Error {
  using Error::Error;
};

struct AllZeroDemand : Error {
  using Error::Error;
};

// Diagnostic only: an oracle check detected that a stated precondition is
// false on a test instance.
struct PromiseViolated : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line) : Error(what), line_number(line) {}
  int line_number;
};

struct MalformedLine : ParseError {
  using ParseError::ParseError;
};
struct SelfLoopError : ParseError {
  using ParseError::ParseError;
};
struct NonPositiveWeight : ParseError {
  using ParseError::ParseError;
};
struct OutOfRange : ParseError {
  using ParseError::ParseError;
};
struct NegativeDemand : ParseError {
  using ParseError::ParseError;
};
struct DuplicateEntry : ParseError {
  using ParseError::ParseError;
};

}  // namespace xdecomp
