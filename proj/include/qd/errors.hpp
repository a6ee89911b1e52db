// Copyright 2026 The qdist Authors
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

namespace qd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong dimensions, non-Hermitian generators,
/// probabilities outside [0, 1] and the like.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A valid request the library deliberately does not handle.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// The request would exceed the dense-matrix size limits.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The two hypotheses cannot be told apart at all (identical generators).
class NoDiscrimination : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition (such as a norm bound) does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qd
