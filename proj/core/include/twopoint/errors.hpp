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

#include <stdexcept>
#include <string>

namespace twopoint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (out-of-range n, r outside
// the radial interval, nonpositive mass, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The isometry algebra of the family has no matrix model in this library
// (quaternionic and Cayley families).
class UnrealizableFamily : public Error {
 public:
  using Error::Error;
};

class EigenstructureMismatch : public Error {
 public:
  using Error::Error;
};

// No embedded (sphere / hyperboloid) model exists for the family.
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

class DegenerateBlock : public Error {
 public:
  using Error::Error;
};

class NoBracket : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class DegenerateCenter : public Error {
 public:
  using Error::Error;
};

}  // namespace twopoint
