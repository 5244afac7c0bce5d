#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bap {

// Base of every error thrown by the library. The CLI maps subclasses onto
// exit codes: InputError/DimensionError/PreconditionError -> 2,
// CapExceeded -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Array shapes disagree with the declared (m, n).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-range user data (files, flags, non-finite values).
class InputError : public Error {
 public:
  using Error::Error;
};

// A caller contract was violated (rank, sum-matrix, infeasible fractional
// point, crossing padded solution, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured solution cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t count, std::uint64_t cap)
      : Error(what), count_(count), cap_(cap) {}

  // Number of items the enumeration would have visited (saturated at
  // UINT64_MAX).
  std::uint64_t count() const { return count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

}  // namespace bap
