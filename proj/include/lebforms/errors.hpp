// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lebforms {

// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally malformed input: wrong sizes, non-finite entries, bad JSON.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Data that fails a mathematical requirement, e.g. a matrix that must be
// Hermitian positive semidefinite is not.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked outside its stated precondition, e.g. asking for
// a singular witness of a form that is not strongly singular.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computed certificate missed its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lebforms
