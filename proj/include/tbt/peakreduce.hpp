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

#include <optional>

#include "tbt/embedding.hpp"

namespace tbt {

// Shape of a dominant bulge in the state profile of a binary conventional
// trellis. `p` is the first class of the bulge; the plateau spans 1, 2 or 3
// classes. `guard_ok` records whether the size floor on |V_{p-1}| that
// guarantees a successful reduction holds (4 for single, 8 for the
// two-class and equal-sets three-class plateaus, 16 otherwise).
enum class PeakKind { single, plateau2, plateau3_equal, plateau3_unequal };

struct PeakPattern {
  PeakKind kind = PeakKind::single;
  std::size_t p = 0;
  std::size_t plateau_len = 1;
  std::size_t guard_floor = 4;
  bool guard_ok = false;
};

const char* peak_kind_name(PeakKind kind);

// Detects the unique matching pattern, side conditions included: every
// class outside [p-1, p+plateau] must be strictly smaller than |V_{p-1}|.
std::optional<PeakPattern> classify_peak(const Trellis& t);

// Selects the embedding parameters prescribed by the pattern's recipe: the
// lexicographically smallest nonzero state common to the classes flanking
// and spanning the bulge, and the first hyperplane of V_p (in functional
// order) that contains the plateau's in-span columns and keeps the images
// of the hyperplane stable across the plateau. Returns nullopt when no
// candidate passes.
std::optional<EmbeddingSpec> find_alpha(const Trellis& t,
                                        const ParityCheckMatrix& h,
                                        const PeakPattern& pattern);

struct PeakReduceResult {
  PeakPattern pattern;
  bool attempted = false;
  bool succeeded = false;
  std::optional<EmbeddingSpec> spec;
  std::optional<EmbeddingResult> embedding;
  int s_max_before = 0;
  int s_max_after = 0;
};

// Applies the recipe to the syndrome trellis of h. When the guard holds the
// reduction is guaranteed; otherwise the same recipe runs best-effort and
// the outcome is reported as-is. Throws precondition_error when there is no
// peak or q != 2.
PeakReduceResult reduce_peak(const ParityCheckMatrix& h,
                             std::size_t cap = kDefaultEnumCap);

// Every class has uniform out-degree 1 or 2.
bool out_degrees_uniform_one_or_two(const Trellis& t);

// States of class cls whose every forward image after `steps` sections lies
// in `targets`. On out-degree-1 sections this is the exact preimage of the
// target set.
std::vector<Vec> preimage_states(const Trellis& t, std::size_t cls,
                                 const std::vector<Vec>& targets,
                                 std::size_t steps);

}  // namespace tbt
