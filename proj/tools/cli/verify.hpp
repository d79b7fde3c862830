// Copyright 2026 The twopoint Authors
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

#include <string>
#include <vector>

namespace twopoint::cli {

struct VerifyRow {
  std::string scope;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual < tolerance; }
};

struct VerifyOptions {
  // Perturbs one structure constant of the first algebra checked.
  bool inject_fault = false;
};

// Scope is algebra, coeffs, dynamics, masscenter or all. Throws
// ConfigError on anything else.
std::vector<VerifyRow> run_verify(const std::string& scope, const VerifyOptions& options);

}  // namespace twopoint::cli
