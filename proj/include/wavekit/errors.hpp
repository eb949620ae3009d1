// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wavekit {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something unusable: bad shapes, parameters, names, files.
class InputError : public Error {
 public:
  using Error::Error;
};

class SizeError : public InputError {
 public:
  using InputError::InputError;
};

class LevelError : public InputError {
 public:
  using InputError::InputError;
};

class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

class CatalogError : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class FormatError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// The inputs were well formed but the numerics could not deliver.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Raised when an eigenvalue-1 eigenspace has the wrong dimension.
class DegeneracyError : public NumericError {
 public:
  DegeneracyError(const std::string& what, std::size_t dimension)
      : NumericError(what), dimension_(dimension) {}
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

class AdmissibilityError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ResolutionError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace wavekit
