// Copyright 2026 The icx Authors
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

#ifndef ICX_ERRORS_H_
#define ICX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace icx {

// Malformed or out-of-domain input (unknown ids, bad probabilities, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed object violates a semantic invariant (non-monotone cost,
// missing null action, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// A requested construction has an empty feasible set.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// The cost function is outside the class an algorithm requires (e.g. not
// submodular for the randomized solver).
class CostClassError : public std::runtime_error {
 public:
  explicit CostClassError(const std::string& what)
      : std::runtime_error(what) {}
};

// Problem size exceeds what an exhaustive routine is willing to enumerate.
class SizeLimitError : public std::length_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

}  // namespace icx

#endif  // ICX_ERRORS_H_
