// Copyright 2026 The Hedgekit Authors. All rights reserved.
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

#ifndef HEDGEKIT_ERRORS_HPP
#define HEDGEKIT_ERRORS_HPP

#include <stdexcept>

namespace hedgekit {

// Malformed data supplied by the caller: CSV contents, non-finite losses,
// dimension mismatches. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside its documented domain: eta <= 0, phi <= 1, horizon < 1,
// fewer than two experts. The CLI maps this to exit code 1 (usage).
class param_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hedgekit

#endif  // HEDGEKIT_ERRORS_HPP
