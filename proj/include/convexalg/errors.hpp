/*
 * Copyright 2026 The convexalg authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convexalg {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic left the representable range of the fixed-width carriers.
struct OverflowError : Error {
  using Error::Error;
};

/// Division by zero, or inversion of a non-invertible element.
struct DivisionByZeroError : Error {
  using Error::Error;
};

/// The requested operation is not defined for the chosen semiring instance.
struct UnsupportedError : Error {
  using Error::Error;
};

/// A documented precondition on the arguments was violated.
struct PreconditionError : Error {
  using Error::Error;
};

/// Values over distinct bases were combined.
struct BasisMismatchError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A basis function was applied to an element outside its domain.
struct UnmappedElementError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// An enumeration would exceed its configured size cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

/// Malformed textual input; `position` is a 0-based offset into the input.
struct SyntaxError : Error {
  std::size_t position;

  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace convexalg
