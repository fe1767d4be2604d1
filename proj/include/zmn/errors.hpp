#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zmn {

// Errors raised for bad arguments (zero where a positive integer is required,
// x < 1, unsupported orders). The CLI maps these to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures of a well-posed computation. The CLI maps these to exit code 2.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class OverflowError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class PrecisionError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class SingularityError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class InsufficientDataError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

}  // namespace zmn
