#pragma once

#include <stdexcept>
#include <string>

namespace regrange {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (bad literal, non-O-sequence, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Requested regularity lies outside the achievable interval.
class OutOfRange : public InvalidInput {
 public:
  OutOfRange(long long requested, long long min_reg, long long max_reg);

  long long requested() const noexcept { return requested_; }
  long long min_reg() const noexcept { return min_reg_; }
  long long max_reg() const noexcept { return max_reg_; }

 private:
  long long requested_;
  long long min_reg_;
  long long max_reg_;
};

/// Height/growth vectors that no Borel set realizes.
class InfeasibleVectors : public Error {
 public:
  using Error::Error;
};

/// A set of terms that fails exchange closure.
class NotBorel : public Error {
 public:
  using Error::Error;
};

/// Brute-force search would exceed the configured size cap.
class CapExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A certified postcondition failed. Always a bug, never bad input.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace regrange
