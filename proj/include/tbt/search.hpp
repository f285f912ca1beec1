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

#include <string>

#include "tbt/embedding.hpp"

namespace tbt {

// One node of the recursive-embedding search: the extended matrix after
// `embeddings` rounds, the trace that produced it, and the state profile of
// the tail-biting trellis it induces on the original code.
struct SearchState {
  ParityCheckMatrix matrix;
  std::size_t embeddings = 0;
  std::vector<EmbeddingSpec> trace;
  StateComplexityProfile induced_scp;
};

struct SearchOptions {
  std::size_t max_embeddings = 3;
  // Frontier width for codes longer than 6 symbols; 0 disables truncation.
  std::size_t beam = 64;
  std::size_t cap = kDefaultEnumCap;
  std::size_t max_code_length = 10;
};

struct SearchResult {
  SearchState best;
  Trellis best_trellis;
  bool exhaustive = true;
  std::size_t explored = 0;
};

// Tail-biting trellis induced on the original length-n code by a matrix
// extended `wraps` times: classes wraps..n+wraps of its syndrome trellis
// with the first `wraps` label coordinates stripped and the boundary
// classes identified.
Trellis induced_tbt(const ParityCheckMatrix& extended, std::size_t wraps,
                    std::size_t cap = kDefaultEnumCap);

// Breadth-first search over recursive embedding constructions, deduplicated
// by isomorphism classes of the induced trellises. Minimizes the induced
// peak state-complexity; ties go to the lexicographically smallest profile,
// then to fewer embeddings. Deterministic for fixed options.
SearchResult minimize_tbt(const ParityCheckMatrix& h,
                          const SearchOptions& options = {});

// Re-applies a recorded trace and returns the induced tail-biting trellis.
Trellis replay(const ParityCheckMatrix& h,
               const std::vector<EmbeddingSpec>& trace,
               std::size_t cap = kDefaultEnumCap);

// Isomorphism-invariant key used to deduplicate search states; equal keys
// are confirmed with the exact isomorphism test.
std::string canonical_signature(const Trellis& t);

}  // namespace tbt
