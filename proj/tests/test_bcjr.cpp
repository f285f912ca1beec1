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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "tbt/bcjr.hpp"

using namespace tbt;
using fixtures::gf2;

namespace {

bool labels_form_subspace(const std::vector<Vec>& labels) {
  for (const Vec& a : labels) {
    for (const Vec& b : labels) {
      if (!std::binary_search(labels.begin(), labels.end(), a + b)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("syndrome trellis of the self-dual 4-bit code") {
  Trellis t = bcjr_construct(fixtures::code42());
  CHECK(scp(t).dims == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(t.class_labels(1) ==
        std::vector<Vec>{Vec(gf2(), {0, 0}), Vec(gf2(), {0, 1})});
  CHECK(t.class_labels(2) ==
        std::vector<Vec>{Vec(gf2(), {0, 0}), Vec(gf2(), {0, 1}),
                         Vec(gf2(), {1, 0}), Vec(gf2(), {1, 1})});
  CHECK(represented_code(t) == fixtures::brute_kernel(fixtures::code42().mat));
}

TEST_CASE("syndrome trellis of hamming74") {
  Trellis t = bcjr_construct(fixtures::hamming74());
  CHECK(scp(t).dims == std::vector<int>{0, 1, 2, 3, 3, 2, 1, 0});
  CHECK(t.class_size(3) == 8);  // every syndrome appears mid-code
  CHECK(represented_code(t) ==
        fixtures::brute_kernel(fixtures::hamming74().mat));
}

TEST_CASE("rate-1 code gives parallel edges between single vertices") {
  ParityCheckMatrix h{Mat::from_rows(gf2(), {{0}})};
  Trellis t = bcjr_construct(h);
  CHECK(t.depth() == 1);
  CHECK(t.class_size(0) == 1);
  CHECK(t.class_size(1) == 1);
  REQUIRE(t.section(0).size() == 2);
  CHECK(t.section(0)[0].symbol == 0);
  CHECK(t.section(0)[1].symbol == 1);
}

TEST_CASE("structural invariants of syndrome trellises") {
  std::mt19937 rng(23);
  std::vector<ParityCheckMatrix> sample{fixtures::code42(),
                                        fixtures::hamming74(),
                                        fixtures::repetition(5)};
  for (int iter = 0; iter < 25; ++iter) {
    std::uniform_int_distribution<std::size_t> rdist(1, 4), ndist(2, 9);
    sample.push_back(fixtures::random_matrix(rng, 2, rdist(rng), ndist(rng)));
  }
  for (const ParityCheckMatrix& h : sample) {
    Trellis t = bcjr_construct(h);
    std::size_t rank = rref(h.mat).rank;
    std::size_t states = 1;
    for (std::size_t i = 0; i < rank; ++i) states *= 2;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      CHECK(states % t.class_size(c) == 0);
      CHECK(labels_form_subspace(t.class_labels(c)));
    }
    // Paths end on the zero syndrome.
    CHECK(t.class_labels(t.depth()) == std::vector<Vec>{Vec(gf2(), h.rows())});
    CHECK(represented_code(t) == codewords(h));
    for (int d : out_degree_profile(t).degrees) {
      CHECK(d >= 1);
      CHECK(d <= 2);
    }
  }
}

TEST_CASE("state space bases match the trellis classes") {
  for (const ParityCheckMatrix& h :
       {fixtures::code42(), fixtures::hamming74()}) {
    Trellis t = bcjr_construct(h);
    for (std::size_t i = 0; i <= h.cols(); ++i) {
      std::vector<Vec> basis = state_space_basis(h, i);
      CHECK(enumerate_span(basis, h.field(), h.rows()) == t.class_labels(i));
    }
  }
}

TEST_CASE("minimality signature") {
  SUBCASE("hamming74 passes all checks") {
    MinimalitySignature sig =
        check_bcjr_minimality_signature(fixtures::hamming74());
    CHECK(sig.reduced);
    CHECK(sig.biproper);
    CHECK(sig.nonmergeable);
    CHECK(sig.linear);
    CHECK(sig.row_space_invariant);
    CHECK(sig.all());
  }
  SUBCASE("self-dual 4-bit code is nonmergeable") {
    CHECK(check_bcjr_minimality_signature(fixtures::code42()).nonmergeable);
  }
  SUBCASE("redundant rows do not change the shape") {
    // Duplicate a row; labels gain a coordinate but the trellis shape stays.
    ParityCheckMatrix padded{Mat::from_rows(gf2(), {{0, 1, 1, 0},
                                                    {1, 0, 0, 1},
                                                    {0, 1, 1, 0}})};
    CHECK(check_bcjr_minimality_signature(padded).row_space_invariant);
    CHECK(isomorphic(bcjr_construct(padded), bcjr_construct(fixtures::code42())));
  }
}
