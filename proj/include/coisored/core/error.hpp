#pragma once

#include <stdexcept>
#include <string>

namespace coisored {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad syntax, unknown names, mismatched rings.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its budget: Groebner S-pairs or closure-loop rounds.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition was checked and found false.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace coisored
