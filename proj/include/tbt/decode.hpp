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

#include "tbt/trellis.hpp"

namespace tbt {

struct DecodeResult {
  Vec codeword;
  std::size_t distance = 0;
};

// Hard-decision nearest-codeword decoding. Tail-biting trellises run one
// Viterbi pass per start vertex and keep the closest closed cycle; ties are
// broken toward the lexicographically smallest codeword.
DecodeResult decode(const Trellis& t, const Vec& received);

}  // namespace tbt
