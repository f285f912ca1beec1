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

#include <cstddef>
#include <vector>

#include "tbt/bcjr.hpp"
#include "tbt/galois.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

// Parameters of one embedding construction: a time index i, a nonzero state
// alpha in V_i of the syndrome trellis, and a hyperplane of V_i avoiding
// alpha ({0} when dim V_i = 1, represented by an empty basis).
struct EmbeddingSpec {
  std::size_t index = 0;
  Vec alpha;
  std::vector<Vec> hyperplane;

  friend bool operator==(const EmbeddingSpec&, const EmbeddingSpec&) = default;
};

struct EmbeddingResult {
  ParityCheckMatrix h_prime;   // (alpha | H | alpha), r x (n+2)
  ParityCheckMatrix h_dagger;  // added constraint row stacked above h_prime
  Trellis t_dagger;            // syndrome trellis of h_dagger, depth n+2
  Trellis tbt;                 // trimmed and stripped tail-biting trellis
};

// (alpha | h_1 ... h_n | alpha).
ParityCheckMatrix extend_matrix(const ParityCheckMatrix& h, const Vec& alpha);

// The added parity row (1, x_2, ..., x_{i+1}, 0, ..., 0) with
// x_j = phi . h'_j: the single linear condition that keeps exactly the
// paths whose partial syndrome at time i+1 lies in ker(phi).
Vec dagger_row(const ParityCheckMatrix& h_prime, std::size_t index,
               const Vec& phi);

// Full extended matrix for the subcode cut out by the hyperplane. Verifies
// ker(h_dagger) against the independent path-filter oracle subcode_ct.
ParityCheckMatrix dagger_matrix(const ParityCheckMatrix& h,
                                const EmbeddingSpec& spec,
                                std::size_t cap = kDefaultEnumCap);

// Independent oracle for the subcode: enumerate ker(h_prime) and keep the
// words whose partial syndrome at index+1 lies in the hyperplane. Returns a
// canonical basis.
std::vector<Vec> subcode_ct(const ParityCheckMatrix& h_prime,
                            std::size_t index,
                            const std::vector<Vec>& hyperplane,
                            std::size_t cap = kDefaultEnumCap);

// Runs the whole construction: extend, add the constraint row, build the
// syndrome trellis, trim its end classes and strip the first label
// coordinate, wrapping the result into a tail-biting trellis whose cycles
// spell exactly ker(h).
EmbeddingResult embed(const ParityCheckMatrix& h, const EmbeddingSpec& spec,
                      std::size_t cap = kDefaultEnumCap);

// All legal embedding specs for the trellis, ordered by (index, alpha,
// hyperplane).
std::vector<EmbeddingSpec> enumerate_specs(const Trellis& t);

// Validates spec against the state spaces of t (which must be the syndrome
// trellis the spec refers to). Throws precondition_error on violation.
void validate_spec(const Trellis& t, const EmbeddingSpec& spec);

struct StateSpacePrediction {
  int case_id = 0;           // 1..4
  std::vector<Vec> states;   // predicted stripped class, sorted
};

// Predicts the stripped state space at index + steps of the embedded
// trellis from forward reachability in t alone: with A = M^r(V_i),
// B = M^r(V_{i,0}) and the images M^r(alpha),
//   case 1: A == B, alpha in B        -> A
//   case 2: A == B, alpha not in B    -> span(A + {alpha})
//   case 3: A != B, all m - alpha in B -> B
//   case 4: otherwise                  -> span(B + {m* - alpha}) for the
//           lexicographically smallest image m* with m* - alpha outside B.
StateSpacePrediction predict_state_space(const Trellis& t,
                                         const EmbeddingSpec& spec,
                                         std::size_t steps);

// True iff the embedded trellis dropped the state dimension at spec.index
// by exactly one.
bool dimension_drop_check(const Trellis& t, const EmbeddingSpec& spec,
                          const EmbeddingResult& result);

// Forward images of a set of states across `steps` sections starting at
// class `from` of t. Exposed for the peak-reduction recipes and tests.
std::vector<Vec> forward_states(const Trellis& t, std::size_t from,
                                const std::vector<Vec>& states,
                                std::size_t steps);

}  // namespace tbt
