// Copyright 2026 The tapx Authors
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

#ifndef TAPX_COMMON_HPP
#define TAPX_COMMON_HPP

#include <stdexcept>
#include <string>

namespace tapx {

using NodeId = int;
using LinkId = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance or solution text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Some tree edge has no covering link.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A structural invariant of the algorithm failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Search budget exhausted before an answer was certified.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace tapx

#endif  // TAPX_COMMON_HPP
