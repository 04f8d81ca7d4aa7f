#pragma once

#include <stdexcept>
#include <string>

namespace clustergeom {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: violated invariant of fixed data, seeds, files, or an
// operation precondition.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Input is well formed but outside what is implemented (frozen p*, weighted
// blowups, ...).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

// A configured resource cap (term count, exponent size) was exceeded.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

// An expression expected to be a Laurent polynomial was not. Carries a
// printable witness (path plus offending expression).
class LaurentViolation : public Error {
public:
  LaurentViolation(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

private:
  std::string witness_;
};

}  // namespace clustergeom
