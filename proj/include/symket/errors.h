// Copyright 2026 The Symket Authors
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

#ifndef SYMKET_ERRORS_H
#define SYMKET_ERRORS_H

#include <stdexcept>
#include <string>

namespace symket {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A scalar could not be reduced to a complex number.
struct NotNumeric : Error {
    using Error::Error;
};

/// An integral has no meaning in the delta/wave-packet calculus (lone functions, delta(0), ...).
struct DivergentIntegral : Error {
    using Error::Error;
};

/// Base states that cannot be added, tensored or paired.
struct IncompatibleStates : Error {
    using Error::Error;
};

/// Operands of a composition share free variable names.
struct VariableCollision : Error {
    using Error::Error;
};

struct InvalidProbabilities : Error {
    using Error::Error;
};

struct UnsupportedProjector : Error {
    using Error::Error;
};

/// A scalar converter met a scalar it has no rule for.
struct UnknownScalar : Error {
    using Error::Error;
};

}  // namespace symket

#endif
