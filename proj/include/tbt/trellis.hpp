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

#include <cstdint>
#include <optional>
#include <vector>

#include "tbt/galois.hpp"

namespace tbt {

struct TrellisEdge {
  std::uint32_t from;
  std::uint8_t symbol;
  std::uint32_t to;
  friend auto operator<=>(const TrellisEdge&, const TrellisEdge&) = default;
};

// A labeled trellis. Conventional trellises of depth n have n+1 vertex
// classes with |V_0| = |V_n| = 1; tail-biting trellises have n classes and
// their last edge section wraps into class 0. Vertices are identified by
// their label, which is unique within a class. Immutable once built.
class Trellis {
 public:
  Field field() const { return field_; }
  std::size_t depth() const { return depth_; }
  bool tail_biting() const { return tail_biting_; }
  std::size_t label_len() const { return label_len_; }

  std::size_t num_classes() const {
    return tail_biting_ ? depth_ : depth_ + 1;
  }
  std::size_t class_size(std::size_t cls) const {
    return classes_[cls].size();
  }
  // Labels of one class, sorted lexicographically.
  const std::vector<Vec>& class_labels(std::size_t cls) const {
    return classes_[cls];
  }
  const Vec& label(std::size_t cls, std::uint32_t idx) const {
    return classes_[cls][idx];
  }
  std::optional<std::uint32_t> find_vertex(std::size_t cls,
                                           const Vec& label) const;

  // Class an edge of section s points into.
  std::size_t section_target(std::size_t s) const {
    return tail_biting_ ? (s + 1) % depth_ : s + 1;
  }
  // Edges of one section, sorted by (from, symbol, to).
  const std::vector<TrellisEdge>& section(std::size_t s) const {
    return sections_[s];
  }

  friend bool operator==(const Trellis&, const Trellis&) = default;

 private:
  friend class TrellisBuilder;
  Field field_{2};
  std::size_t depth_ = 0;
  bool tail_biting_ = false;
  std::size_t label_len_ = 0;
  std::vector<std::vector<Vec>> classes_;
  std::vector<std::vector<TrellisEdge>> sections_;
};

// Accumulates vertices and edges by label, then produces a canonical
// Trellis (classes sorted by label, edges sorted, structural invariants
// checked).
class TrellisBuilder {
 public:
  TrellisBuilder(Field f, std::size_t depth, bool tail_biting,
                 std::size_t label_len);

  void add_vertex(std::size_t cls, const Vec& label);
  void add_edge(std::size_t section, const Vec& from, std::uint8_t symbol,
                const Vec& to);

  Trellis build() &&;

 private:
  Field field_;
  std::size_t depth_;
  bool tail_biting_;
  std::size_t label_len_;
  std::vector<std::vector<Vec>> verts_;  // per class, unsorted, deduped
  struct LabeledEdge {
    Vec from;
    std::uint8_t symbol;
    Vec to;
  };
  std::vector<std::vector<LabeledEdge>> edges_;
};

// log_q |V_i| per class. Sizes that are not powers of q keep dim = -1 and
// comparisons fall back to raw sizes.
struct StateComplexityProfile {
  std::vector<std::size_t> sizes;
  std::vector<int> dims;
  bool exact = true;        // every size is a power of q
  int s_max = 0;            // max dim, meaningful when exact
  std::size_t s_max_size = 1;
};

StateComplexityProfile scp(const Trellis& t);

// Edge-label sequences of all root-to-goal paths (conventional) or all
// length-n closed cycles that start in class 0 (tail-biting). Sorted.
std::vector<Vec> represented_code(const Trellis& t,
                                  std::size_t cap = kDefaultEnumCap);

// Alternating vertex-label / edge-label sequences, one per path or cycle,
// flattened to vectors of length depth * (label_len + 1). Sorted.
std::vector<Vec> label_code(const Trellis& t,
                            std::size_t cap = kDefaultEnumCap);

// True iff the label code is closed under componentwise addition (hence a
// vector space over the prime field).
bool is_linear(const Trellis& t, std::size_t cap = kDefaultEnumCap);

// No vertex has two in-edges or two out-edges carrying the same symbol.
bool is_biproper(const Trellis& t);

// Every vertex lies on at least one full path (cycle).
bool is_reduced(const Trellis& t);

struct MergeWitness {
  bool mergeable = false;
  std::size_t cls = 0;
  std::optional<Vec> a;
  std::optional<Vec> b;
};

// Brute-force test for a same-class vertex pair whose fusion (union of
// incident edges) leaves the represented code unchanged.
MergeWitness is_mergeable(const Trellis& t, std::size_t cap = kDefaultEnumCap);

struct OutDegreeProfile {
  std::vector<int> degrees;  // per section; -1 where out-degrees differ
  bool all_uniform() const {
    for (int d : degrees) {
      if (d < 0) return false;
    }
    return true;
  }
};

OutDegreeProfile out_degree_profile(const Trellis& t);

// Layered-graph isomorphism preserving class indices and edge symbols.
bool isomorphic(const Trellis& a, const Trellis& b);

// Cyclic shift of a tail-biting trellis so old class `shift` becomes the
// new class 0.
Trellis rotate(const Trellis& t, std::size_t shift);

}  // namespace tbt
