#pragma once

#include <stdexcept>
#include <string>

namespace pwmra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class RadicandMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SupportViolation : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold during construction did not. This
/// signals a bug, not bad input; `identity()` names the failed relation.
class ConstructionFailure : public Error {
 public:
  ConstructionFailure(std::string identity, const std::string& detail)
      : Error("construction failure [" + identity + "]: " + detail),
        identity_(std::move(identity)) {}

  const std::string& identity() const noexcept { return identity_; }

 private:
  std::string identity_;
};

class RankDeficiency : public ConstructionFailure {
 public:
  using ConstructionFailure::ConstructionFailure;
};

}  // namespace pwmra
