#pragma once

#include <stdexcept>
#include <string>

namespace tempoflow {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (network files, flow documents). Carries the
// 1-based line number when one is known.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string& message) : Error(message), line_(0) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Semantically invalid request on otherwise well-formed data
// (infeasible static flow, non-maximum flow passed to min_cut, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Valid request that this configuration does not support
// (e.g. temporal cuts on bounded-buffer networks).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace tempoflow
