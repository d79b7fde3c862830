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

#include <map>
#include <string>
#include <vector>

#include "twopoint/dynamics.hpp"
#include "twopoint/errors.hpp"

namespace twopoint::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A simulate run as read from an INI file. Momentum components not named
// under [initial] start at zero.
struct RunConfig {
  SpaceSpec space;
  TwoBodyParams params;
  double r = 0.0;
  double p_r = 0.0;
  std::map<std::string, double> mu;
  IntegratorOptions integrator;
  std::string output_path;
  std::string format = "csv";
};

// Throws ConfigError on unreadable files, unknown sections or keys,
// malformed numbers and values rejected by the library preconditions.
RunConfig load_config(const std::string& path);

// Parses the full string as a finite double.
double parse_number(const std::string& text, const std::string& where);
std::vector<double> parse_list(const std::string& text, const std::string& where);

}  // namespace twopoint::cli
