// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lerch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (0^s with Re(s) <= 0,
// parameters that violate an entry's convergence strip, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole: Gamma at non-positive integers, zeta at s = 1,
// Lerch with v in {0, -1, -2, ...}.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Argument on a branch cut the library does not continue across.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The arguments are mathematically valid but no implemented evaluation
// strategy covers them. Never silently approximated.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(const std::string& id) : Error("unknown entry id '" + id + "'") {}
};

}  // namespace lerch
