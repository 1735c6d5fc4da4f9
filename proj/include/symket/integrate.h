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

#ifndef SYMKET_INTEGRATE_H
#define SYMKET_INTEGRATE_H

#include <set>
#include <string>

#include "symket/scalar.h"

namespace symket {

/// Integrates `s` over every variable that appears in it.
Scalar integrate(const Scalar &s);

/// Integrates `s` over the real line in each of `variables`.
///
/// Works term by term on the expanded sum of products. Delta factors are
/// eliminated by substitution; a remaining f^*(x) g(x) pair becomes <f|g>.
/// Variables a term does not depend on are left alone. Amplitude symbols
/// (Variable nodes) are constants with respect to integration.
///
/// Throws DivergentIntegral when a variable survives with no delta and no
/// recognizable pair, or when a delta collapses to D[x-x].
Scalar integrate(const Scalar &s, const std::set<std::string> &variables);

}  // namespace symket

#endif
