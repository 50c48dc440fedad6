// Copyright 2026 The QCS Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DegenerateTriple : public Error {
  public:
    using Error::Error;
};

class SingularMap : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class InfinitePoint : public Error {
  public:
    using Error::Error;
};

class BadSubsystem : public Error {
  public:
    using Error::Error;
};

class BadParams : public Error {
  public:
    using Error::Error;
};

class FormulaUnavailable : public Error {
  public:
    using Error::Error;
};

class NoConvergence : public Error {
  public:
    using Error::Error;
};

/// Raised when a state or operator violates a structural invariant
/// (normalization, unitarity, hermiticity).
class InvariantViolation : public Error {
  public:
    using Error::Error;
};

} // namespace qcs
