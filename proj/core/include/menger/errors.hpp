// Copyright 2026 The Menger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace menger {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition (out-of-order indices, M <= 2N, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Irregular parametrization, coincident samples or a non-finite
/// intermediate. The geometry cannot be evaluated.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A linear system that should be positive definite was not.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// The flow gave up after exhausting its step halvings.
class FlowAbort : public Error {
 public:
  using Error::Error;
};

}  // namespace menger
