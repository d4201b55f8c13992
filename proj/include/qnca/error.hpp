// Copyright 2026 The qnca Authors
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

namespace qnca {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical check failed; the message carries a witness.
class MathError : public Error {
 public:
  using Error::Error;
};

/// The input presentation violates a structural requirement.
class InvalidPresentation : public MathError {
 public:
  using MathError::MathError;
};

/// The prime-element search needs a larger degree bound. Retryable.
class DegreeCapExceeded : public MathError {
 public:
  using MathError::MathError;
};

/// More than one predecessor candidate produced a normal element.
class UniquenessViolation : public MathError {
 public:
  using MathError::MathError;
};

/// Malformed text or file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qnca
