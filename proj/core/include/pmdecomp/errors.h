// Copyright 2026 The pmdecomp Authors
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

#ifndef PMDECOMP_ERRORS_H_
#define PMDECOMP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pmdecomp {

// Caller passed an argument outside the operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input vector is not a fractional perfect matching (or, for the
// bipartite baseline, its residual support has no perfect matching).
class InfeasibleInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithmic invariant failed. Indicates a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force oracle refused an instance above its size limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

#define PMDECOMP_CHECK(cond, msg)                                   \
  do {                                                              \
    if (!(cond)) {                                                  \
      throw ::pmdecomp::InvariantError(std::string(__func__) + ": " + \
                                       (msg));                      \
    }                                                               \
  } while (false)

}  // namespace pmdecomp

#endif  // PMDECOMP_ERRORS_H_
