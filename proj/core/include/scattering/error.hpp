// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <stdexcept>
#include <string>

namespace scattering {

/// Base class of every exception thrown by the library. Carries the name of
/// the module that raised it so front ends can report "module: message".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Malformed or out-of-contract input (bad coefficients, P == Q, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The model handed to Tate's algorithm is not minimal at the prime.
class NonMinimalModel : public Error {
 public:
  using Error::Error;
};

/// Local geometry outside the supported envelope.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A numerical routine could not reach the requested precision.
class PrecisionError : public Error {
 public:
  PrecisionError(std::string module, const std::string& message, int achieved_digits)
      : Error(std::move(module), message), achieved_digits_(achieved_digits) {}

  int achieved_digits() const noexcept { return achieved_digits_; }

 private:
  int achieved_digits_;
};

}  // namespace scattering
