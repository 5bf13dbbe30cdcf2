// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qchan {

/// Base class of every error raised by the library. The C API maps each
/// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together (non-square, wrong N², size mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Inputs that violate a physical invariant: non-CP, non-TP, not a state,
/// not unitary, not an isometry.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the mathematical domain of an operation (q < 1 for a
/// norm, alpha outside [0, 1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A decomposition that failed to converge or produced non-finite output.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON channel specs, CLI configuration).
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qchan
