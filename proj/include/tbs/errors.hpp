#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tbs {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated (mismatched groups, bad order, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The request is mathematically meaningful but outside what the library computes
// (infinite groups for exhaustive routines, oversized oracle problems, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A domain object failed one of its invariants. `kind` is a short machine-readable
// tag ("normalization", "cocycle_identity", "well_definedness", ...), `path` a JSON
// pointer into the input document when the object came from a file.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, std::string path, const std::string& what)
      : Error(what), kind_(std::move(kind)), path_(std::move(path)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string kind_;
  std::string path_;
};

}  // namespace tbs
