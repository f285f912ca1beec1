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

#include "doctest.h"
#include "fixtures.hpp"
#include "tbt/search.hpp"

using namespace tbt;
using fixtures::gf2;

TEST_CASE("the zero-wrap induced trellis is the conventional one") {
  Trellis t = induced_tbt(fixtures::code42(), 0);
  CHECK(t.tail_biting());
  CHECK(t.depth() == 4);
  CHECK(scp(t).dims == std::vector<int>{0, 1, 2, 1});
  CHECK(represented_code(t) == codewords(fixtures::code42()));
}

TEST_CASE("single-round search on the 4-bit code") {
  SearchOptions opts;
  opts.max_embeddings = 1;
  SearchResult r = minimize_tbt(fixtures::code42(), opts);
  CHECK(r.best.embeddings == 1);
  CHECK(r.best.induced_scp.s_max == 1);
  CHECK(r.best.induced_scp.dims == std::vector<int>{1, 0, 1, 0});
  CHECK(r.exhaustive);
  CHECK(represented_code(r.best_trellis) == codewords(fixtures::code42()));

  SUBCASE("no single embedding beats one active state bit") {
    // Exhaustive over all one-round constructions, so the optimum found is
    // the optimum available.
    CHECK(r.best.induced_scp.s_max >= 1);
  }
  SUBCASE("replay reproduces the winner exactly") {
    CHECK(replay(fixtures::code42(), r.best.trace) == r.best_trellis);
  }
  SUBCASE("the search is deterministic") {
    SearchResult again = minimize_tbt(fixtures::code42(), opts);
    CHECK(again.best.trace == r.best.trace);
    CHECK(again.best_trellis == r.best_trellis);
    CHECK(again.explored == r.explored);
  }
}

TEST_CASE("single-round search on hamming74") {
  SearchOptions opts;
  opts.max_embeddings = 1;
  SearchResult r = minimize_tbt(fixtures::hamming74(), opts);
  CHECK(r.best.induced_scp.s_max == 2);
  CHECK(represented_code(r.best_trellis) == codewords(fixtures::hamming74()));
  CHECK(replay(fixtures::hamming74(), r.best.trace) == r.best_trellis);
}

TEST_CASE("zero rounds return the conventional trellis") {
  SearchOptions opts;
  opts.max_embeddings = 0;
  SearchResult r = minimize_tbt(fixtures::code42(), opts);
  CHECK(r.best.embeddings == 0);
  CHECK(r.best.trace.empty());
  CHECK(r.best.induced_scp.s_max == 2);
  CHECK(replay(fixtures::code42(), {}) == r.best_trellis);
}

TEST_CASE("two rounds drive a class dimension to zero") {
  std::vector<EmbeddingSpec> trace{
      EmbeddingSpec{2, Vec(gf2(), {0, 1}), {Vec(gf2(), {1, 0})}},
      EmbeddingSpec{3, Vec(gf2(), {0, 1, 0}), {}}};
  Trellis t = replay(fixtures::code42(), trace);
  CHECK(t.depth() == 4);
  CHECK(represented_code(t) == codewords(fixtures::code42()));
  // The second round collapses the class at original index 2.
  CHECK(scp(t).dims[2] == 0);
}

TEST_CASE("every index with states offers an expansion") {
  Trellis t = bcjr_construct(fixtures::code42());
  std::vector<EmbeddingSpec> specs = enumerate_specs(t);
  for (std::size_t i = 1; i < t.depth(); ++i) {
    if (t.class_size(i) < 2) continue;
    bool seen = false;
    for (const EmbeddingSpec& s : specs) seen = seen || s.index == i;
    CHECK(seen);
  }
  // (index, alpha, hyperplane) choices for profile 0 1 2 1 0.
  CHECK(specs.size() == 1 + 3 * 2 + 1);
}

TEST_CASE("canonical signatures separate and identify") {
  Trellis a = bcjr_construct(fixtures::hamming74());
  ParityCheckMatrix permuted{Mat::from_rows(gf2(), {{0, 1, 1, 1, 0, 0, 1},
                                                    {1, 1, 0, 0, 1, 0, 1},
                                                    {1, 1, 1, 0, 0, 1, 0}})};
  Trellis b = bcjr_construct(permuted);
  CHECK(canonical_signature(a) == canonical_signature(b));
  CHECK(canonical_signature(fixtures::tbt42_sparse()) !=
        canonical_signature(fixtures::tbt42_dense()));
}

TEST_CASE("search rejects oversized inputs") {
  ParityCheckMatrix wide = fixtures::repetition(11);
  CHECK_THROWS_AS(minimize_tbt(wide), precondition_error);
}
