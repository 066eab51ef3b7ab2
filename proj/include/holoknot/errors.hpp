#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holoknot {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch(const std::string& lhs, const std::string& rhs)
      : Error("ring mismatch: " + lhs + " vs " + rhs) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotPerfectSquare : public Error {
 public:
  using Error::Error;
};

class SubstitutionError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Invalid argument at the domain level: unknown family, zero divisor, bad index.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace holoknot
