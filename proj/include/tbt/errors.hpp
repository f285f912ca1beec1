// Copyright 2026 The tbtrellis Authors
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

namespace tbt {

// Malformed input text (matrix files, trellis documents, CLI arguments).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured element cap.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction invariant failed; indicates a bug or an out-of-contract
// input rather than a user error.
class internal_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tbt
