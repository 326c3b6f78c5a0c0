#pragma once

#include <stdexcept>
#include <string>

namespace autograph {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied parameter violates a precondition (bad group parameters,
// malformed graph6, out-of-range vertex, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a supported size (group order, vertex count, search range).
class LimitError : public Error {
 public:
  using Error::Error;
};

// A construction was asked to build a graph for a group outside the
// hypotheses it is valid for. `clause()` names the failed hypothesis.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string clause, const std::string& what)
      : Error(what), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace autograph
