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
#include "tbt/embedding.hpp"

using namespace tbt;
using fixtures::gf2;

namespace {

EmbeddingSpec spec42_primary() {
  return EmbeddingSpec{2, Vec(gf2(), {0, 1}), {Vec(gf2(), {1, 0})}};
}
EmbeddingSpec spec42_alternate() {
  return EmbeddingSpec{2, Vec(gf2(), {0, 1}), {Vec(gf2(), {1, 1})}};
}
EmbeddingSpec spec74_alpha110() {
  return EmbeddingSpec{
      3, Vec(gf2(), {1, 1, 0}),
      {Vec(gf2(), {0, 0, 1}), Vec(gf2(), {1, 0, 0})}};
}

}  // namespace

TEST_CASE("extending the matrix with a boundary state") {
  ParityCheckMatrix hp = extend_matrix(fixtures::code42(), Vec(gf2(), {0, 1}));
  CHECK(hp.mat == Mat::from_rows(gf2(), {{0, 0, 1, 1, 0, 0},
                                         {1, 1, 0, 0, 1, 1}}));

  SUBCASE("alpha equal to the first column duplicates it") {
    ParityCheckMatrix h2 = extend_matrix(fixtures::code42(), Vec(gf2(), {0, 1}));
    CHECK(h2.mat.col(0) == h2.mat.col(1));
  }
  SUBCASE("hamming74 extension matches the expected columns") {
    ParityCheckMatrix h2 =
        extend_matrix(fixtures::hamming74(), Vec(gf2(), {1, 1, 0}));
    Mat expected = fixtures::dagger74_alpha110();
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 9; ++c) {
        CHECK(h2.mat.at(r, c) == expected.at(r + 1, c));
      }
    }
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(extend_matrix(fixtures::code42(), Vec(gf2(), {1, 0, 0})),
                    precondition_error);
  }
}

TEST_CASE("the added constraint row") {
  ParityCheckMatrix hp = extend_matrix(fixtures::code42(), Vec(gf2(), {0, 1}));
  CHECK(dagger_row(hp, 2, Vec(gf2(), {0, 1})) ==
        Vec::from_digits(gf2(), "110000"));
  CHECK(dagger_row(hp, 2, Vec(gf2(), {1, 1})) ==
        Vec::from_digits(gf2(), "111000"));

  ParityCheckMatrix hp74 =
      extend_matrix(fixtures::hamming74(), Vec(gf2(), {1, 1, 0}));
  CHECK(dagger_row(hp74, 3, Vec(gf2(), {0, 1, 0})) ==
        Vec::from_digits(gf2(), "111100000"));

  SUBCASE("phi must pair to one with alpha") {
    CHECK_THROWS_AS(dagger_row(hp, 2, Vec(gf2(), {1, 0})), precondition_error);
  }
}

TEST_CASE("extended matrices reproduce the expected fixtures exactly") {
  CHECK(dagger_matrix(fixtures::code42(), spec42_primary()).mat ==
        fixtures::dagger42_primary());
  CHECK(dagger_matrix(fixtures::code42(), spec42_alternate()).mat ==
        fixtures::dagger42_alternate());
  CHECK(dagger_matrix(fixtures::hamming74(), spec74_alpha110()).mat ==
        fixtures::dagger74_alpha110());
}

TEST_CASE("spec validation") {
  Trellis t = bcjr_construct(fixtures::code42());
  CHECK_THROWS_AS(validate_spec(t, EmbeddingSpec{2, Vec(gf2(), 2), {}}),
                  precondition_error);  // zero alpha
  CHECK_THROWS_AS(
      validate_spec(t, EmbeddingSpec{1, Vec(gf2(), {1, 0}),
                                     {}}),
      precondition_error);  // not a state of V_1
  CHECK_THROWS_AS(
      validate_spec(t, EmbeddingSpec{2, Vec(gf2(), {0, 1}),
                                     {Vec(gf2(), {0, 1})}}),
      precondition_error);  // alpha inside the hyperplane
  CHECK_NOTHROW(validate_spec(t, spec42_primary()));
}

TEST_CASE("the path-filter subcode oracle") {
  ParityCheckMatrix hp = extend_matrix(fixtures::code42(), Vec(gf2(), {0, 1}));
  std::vector<Vec> ct = subcode_ct(hp, 2, {Vec(gf2(), {1, 0})});
  // One linear condition on the extended kernel: dimension drops 4 -> 3.
  CHECK(ct.size() == 3);

  // The members whose wrapper symbols cancel strip to the original code.
  std::vector<Vec> stripped;
  for (const Vec& w : enumerate_span(ct, gf2(), 6)) {
    if (w[0] == w[5]) {  // binary: first symbol equals minus the last
      Vec mid(gf2(), 4);
      for (std::size_t j = 0; j < 4; ++j) mid.set(j, w[j + 1]);
      stripped.push_back(mid);
    }
  }
  std::sort(stripped.begin(), stripped.end());
  stripped.erase(std::unique(stripped.begin(), stripped.end()), stripped.end());
  CHECK(stripped == fixtures::brute_kernel(fixtures::code42().mat));

  SUBCASE("zero hyperplane keeps the zero-syndrome paths") {
    ParityCheckMatrix hp1 =
        extend_matrix(fixtures::code42(), Vec(gf2(), {0, 1}));
    std::vector<Vec> ct1 = subcode_ct(hp1, 1, {});
    for (const Vec& w : enumerate_span(ct1, gf2(), 6)) {
      Vec syn(gf2(), 2);
      for (std::size_t j = 0; j <= 1; ++j) {
        syn = syn + hp1.mat.col(j).scaled(w[j]);
      }
      CHECK(syn.is_zero());
    }
  }
  SUBCASE("the extended matrix kernel equals the oracle") {
    ParityCheckMatrix hp74 =
        extend_matrix(fixtures::hamming74(), Vec(gf2(), {1, 1, 0}));
    std::vector<Vec> ct74 = subcode_ct(
        hp74, 3, {Vec(gf2(), {0, 0, 1}), Vec(gf2(), {1, 0, 0})});
    CHECK(ct74.size() == 5);  // one below the extended kernel dimension 6
    ParityCheckMatrix hd =
        dagger_matrix(fixtures::hamming74(), spec74_alpha110());
    std::vector<Vec> kb = kernel_basis(hd.mat);
    CHECK(kb.size() == ct74.size());
    for (const Vec& v : kb) CHECK(in_span(ct74, v));
  }
}

TEST_CASE("embedding the self-dual 4-bit code") {
  EmbeddingResult primary = embed(fixtures::code42(), spec42_primary());
  CHECK(primary.tbt == fixtures::tbt42_sparse());
  CHECK(scp(primary.tbt).dims == std::vector<int>{1, 0, 1, 0});
  CHECK(represented_code(primary.tbt) ==
        fixtures::brute_kernel(fixtures::code42().mat));

  EmbeddingResult alternate = embed(fixtures::code42(), spec42_alternate());
  CHECK(alternate.tbt == fixtures::tbt42_dense());
  CHECK(scp(alternate.tbt).dims == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("embedding hamming74 at the profile peak") {
  EmbeddingResult r = embed(fixtures::hamming74(), spec74_alpha110());
  CHECK(scp(r.tbt).s_max == 2);
  CHECK(r.tbt.class_size(0) == 2);
  CHECK(represented_code(r.tbt).size() == 16);
  CHECK(represented_code(r.tbt) ==
        fixtures::brute_kernel(fixtures::hamming74().mat));

  // Class contents transcribed from the reference drawing.
  auto labels = [&](std::initializer_list<const char*> ds) {
    std::vector<Vec> v;
    for (const char* d : ds) v.push_back(Vec::from_digits(gf2(), d));
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(r.tbt.class_labels(0) == labels({"000", "110"}));
  CHECK(r.tbt.class_labels(2) == labels({"000", "001", "110", "111"}));
  CHECK(r.tbt.class_labels(3) == labels({"000", "001", "100", "101"}));
  CHECK(r.tbt.class_labels(5) == labels({"000", "001", "100", "101"}));
  CHECK(r.tbt.class_labels(6) == labels({"000", "011", "101", "110"}));
}

TEST_CASE("equivalent embeddings produce one trellis") {
  EmbeddingResult a = embed(fixtures::code42(),
                            EmbeddingSpec{1, Vec(gf2(), {0, 1}), {}});
  EmbeddingResult b = embed(fixtures::code42(), spec42_primary());
  EmbeddingResult c = embed(fixtures::code42(),
                            EmbeddingSpec{3, Vec(gf2(), {0, 1}), {}});
  CHECK(isomorphic(a.tbt, b.tbt));
  CHECK(isomorphic(b.tbt, c.tbt));
  CHECK(isomorphic(a.tbt, c.tbt));
}

TEST_CASE("state space prediction against the construction") {
  Trellis t74 = bcjr_construct(fixtures::hamming74());
  EmbeddingSpec spec = spec74_alpha110();
  EmbeddingResult emb = embed(fixtures::hamming74(), spec);

  SUBCASE("case ids on the reference embedding") {
    CHECK(predict_state_space(t74, spec, 1).case_id == 3);
    CHECK(predict_state_space(t74, spec, 2).case_id == 4);
    CHECK(predict_state_space(t74, spec, 3).case_id == 2);
  }
  SUBCASE("set equality at every legal offset") {
    for (std::size_t r = 1; spec.index + r < 7; ++r) {
      StateSpacePrediction p = predict_state_space(t74, spec, r);
      CHECK(p.states == emb.tbt.class_labels(spec.index + r));
    }
  }
  SUBCASE("second-level construction is predicted correctly") {
    // The discriminant lands in the stable-hyperplane case here: the class
    // one step past the embedding keeps the hyperplane image, which is what
    // drops its dimension to 1.
    ParityCheckMatrix hd{fixtures::dagger74_alpha110()};
    Trellis td = bcjr_construct(hd);
    EmbeddingSpec spec2{4, Vec(gf2(), {0, 1, 0, 1}),
                        {Vec(gf2(), {0, 0, 0, 1})}};
    StateSpacePrediction p = predict_state_space(td, spec2, 1);
    CHECK(p.case_id == 3);
    EmbeddingResult emb2 = embed(hd, spec2);
    CHECK(p.states == emb2.tbt.class_labels(5));
    CHECK(scp(emb2.tbt).dims[5] == 1);
  }
  SUBCASE("offsets outside the depth are rejected") {
    CHECK_THROWS_AS(predict_state_space(t74, spec, 4), precondition_error);
    CHECK_THROWS_AS(predict_state_space(t74, spec, 0), precondition_error);
  }
}

TEST_CASE("dimension drop at the embedding index") {
  Trellis t42 = bcjr_construct(fixtures::code42());
  EmbeddingResult r42 = embed(fixtures::code42(), spec42_primary());
  CHECK(dimension_drop_check(t42, spec42_primary(), r42));

  Trellis t74 = bcjr_construct(fixtures::hamming74());
  EmbeddingResult r74 = embed(fixtures::hamming74(), spec74_alpha110());
  CHECK(dimension_drop_check(t74, spec74_alpha110(), r74));

  EmbeddingSpec line{1, Vec(gf2(), {0, 1}), {}};
  EmbeddingResult r1 = embed(fixtures::code42(), line);
  CHECK(dimension_drop_check(t42, line, r1));
  CHECK(scp(r1.tbt).dims[1] == 0);
}

TEST_CASE("the construction composes with itself") {
  // Re-run on an already extended matrix and observe the collapsed class.
  ParityCheckMatrix hd{fixtures::dagger42_primary()};
  Trellis td = bcjr_construct(hd);
  REQUIRE(td.class_labels(3) ==
          std::vector<Vec>{Vec(gf2(), {0, 0, 0}), Vec(gf2(), {0, 1, 0})});
  EmbeddingSpec spec2{3, Vec(gf2(), {0, 1, 0}), {}};
  EmbeddingResult r = embed(hd, spec2);
  CHECK(scp(bcjr_construct(r.h_dagger)).dims[4] == 0);
  CHECK(represented_code(r.tbt) == codewords(hd));
}

TEST_CASE("exhaustive properties on small random codes") {
  std::mt19937 rng(101);
  int codes_done = 0;
  while (codes_done < 40) {
    std::uniform_int_distribution<std::size_t> rdist(1, 4), ndist(3, 6);
    ParityCheckMatrix h = fixtures::random_matrix(rng, 2, rdist(rng), ndist(rng));
    if (kernel_basis(h.mat).empty()) continue;
    ++codes_done;
    Trellis t = bcjr_construct(h);
    std::vector<Vec> code = codewords(h);
    for (const EmbeddingSpec& spec : enumerate_specs(t)) {
      EmbeddingResult r = embed(h, spec);  // asserts code preservation
      CHECK(represented_code(r.tbt) == code);
      CHECK(is_linear(r.tbt));
      CHECK_FALSE(is_mergeable(r.tbt).mergeable);
      CHECK(is_biproper(r.tbt));
      CHECK(is_reduced(r.tbt));
      CHECK(dimension_drop_check(t, spec, r));
      for (std::size_t off = 1; spec.index + off < t.depth(); ++off) {
        CHECK(predict_state_space(t, spec, off).states ==
              r.tbt.class_labels(spec.index + off));
      }
    }
  }
}

TEST_CASE("ternary codes embed too") {
  Field f3(3);
  ParityCheckMatrix h{Mat::from_rows(f3, {{1, 2, 1, 0}, {0, 1, 1, 1}})};
  Trellis t = bcjr_construct(h);
  std::vector<Vec> code = codewords(h);
  for (const EmbeddingSpec& spec : enumerate_specs(t)) {
    EmbeddingResult r = embed(h, spec);
    CHECK(represented_code(r.tbt) == code);
    CHECK(dimension_drop_check(t, spec, r));
  }
}
