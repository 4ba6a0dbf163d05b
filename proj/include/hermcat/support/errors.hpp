#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// Raised by exhaustive procedures when the base field is ℚ or ℚ(√d).
class InfiniteBase : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate)
      : Error(what + " (estimated " + std::to_string(estimate) + " operations)"),
        estimate_(estimate) {}

  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

}  // namespace hermcat
