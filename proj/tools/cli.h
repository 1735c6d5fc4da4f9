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

#ifndef SYMKET_TOOLS_CLI_H
#define SYMKET_TOOLS_CLI_H

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "symket/povm.h"

namespace symket::cli {

/// Numpy-style bracketed rows, 4 significant digits, decimal points aligned.
std::string format_pretty(const Eigen::MatrixXd &matrix);
/// {"projector": [L, R], "visibility": V, "basis": [...], "matrix": [[...]]}
std::string format_json(const povm::PovmResult &result);
/// One line per row, comma separated.
std::string format_csv(const Eigen::MatrixXd &matrix);

/// Entry point shared by the binary and the tests.
/// Exit codes: 0 success, 1 computation error, 2 usage error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace symket::cli

#endif
