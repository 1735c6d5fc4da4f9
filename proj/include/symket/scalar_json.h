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

#ifndef SYMKET_SCALAR_JSON_H
#define SYMKET_SCALAR_JSON_H

#include "json.hpp"
#include "symket/scalar.h"

namespace symket {

/// Debug dump of the expression tree: {"kind": <tag>, "args": [...]}.
nlohmann::json to_json(const Scalar &s);

}  // namespace symket

#endif
