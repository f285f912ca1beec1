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

#include <random>
#include <vector>

#include "tbt/bcjr.hpp"
#include "tbt/galois.hpp"

namespace tbt::fixtures {

inline Field gf2() { return Field(2); }

// Self-dual (4,2) binary code.
inline ParityCheckMatrix code42() {
  return ParityCheckMatrix{
      Mat::from_rows(gf2(), {{0, 1, 1, 0}, {1, 0, 0, 1}})};
}

// (7,4) Hamming code.
inline ParityCheckMatrix hamming74() {
  return ParityCheckMatrix{Mat::from_rows(gf2(), {{1, 1, 0, 0, 1, 0, 1},
                                                  {1, 1, 1, 0, 0, 1, 0},
                                                  {0, 1, 1, 1, 0, 0, 1}})};
}

// (n,1) repetition code.
inline ParityCheckMatrix repetition(std::size_t n) {
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    std::vector<int> row(n, 0);
    row[0] = 1;
    row[r + 1] = 1;
    rows.push_back(row);
  }
  return ParityCheckMatrix{Mat::from_rows(gf2(), rows)};
}

// Expected extended matrices for the embedding fixtures.
inline Mat dagger42_primary() {
  return Mat::from_rows(gf2(), {{1, 1, 0, 0, 0, 0},
                                {0, 0, 1, 1, 0, 0},
                                {1, 1, 0, 0, 1, 1}});
}

inline Mat dagger42_alternate() {
  return Mat::from_rows(gf2(), {{1, 1, 1, 0, 0, 0},
                                {0, 0, 1, 1, 0, 0},
                                {1, 1, 0, 0, 1, 1}});
}

inline Mat dagger74_alpha110() {
  return Mat::from_rows(gf2(), {{1, 1, 1, 1, 0, 0, 0, 0, 0},
                                {1, 1, 1, 0, 0, 1, 0, 1, 1},
                                {1, 1, 1, 1, 0, 0, 1, 0, 1},
                                {0, 0, 1, 1, 1, 0, 0, 1, 0}});
}

inline Mat dagger74_alpha111() {
  return Mat::from_rows(gf2(), {{1, 1, 1, 1, 0, 0, 0, 0, 0},
                                {1, 1, 1, 0, 0, 1, 0, 1, 1},
                                {1, 1, 1, 1, 0, 0, 1, 0, 1},
                                {1, 0, 1, 1, 1, 0, 0, 1, 1}});
}

// Twice-extended matrices used as input fixtures for the recursion checks.
inline ParityCheckMatrix double_wrap42() {
  return ParityCheckMatrix{Mat::from_rows(gf2(), {{1, 1, 1, 1, 0, 0, 0, 0},
                                                  {0, 1, 1, 0, 0, 0, 0, 0},
                                                  {1, 0, 0, 1, 1, 0, 0, 1},
                                                  {0, 1, 1, 0, 0, 1, 1, 0}})};
}

inline ParityCheckMatrix double_wrap74() {
  return ParityCheckMatrix{
      Mat::from_rows(gf2(), {{1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                             {0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                             {1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1},
                             {0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0},
                             {1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1}})};
}

// Hand-built tail-biting trellis for the (4,2) code with profile 1 0 1 0.
inline Trellis tbt42_sparse() {
  Field f = gf2();
  TrellisBuilder b(f, 4, true, 2);
  b.add_edge(0, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(0, Vec(f, {0, 1}), 1, Vec(f, {0, 0}));
  b.add_edge(1, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(1, Vec(f, {0, 0}), 1, Vec(f, {1, 0}));
  b.add_edge(2, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(2, Vec(f, {1, 0}), 1, Vec(f, {0, 0}));
  b.add_edge(3, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(3, Vec(f, {0, 0}), 1, Vec(f, {0, 1}));
  return std::move(b).build();
}

// Alternate-hyperplane variant with profile 1 1 1 1.
inline Trellis tbt42_dense() {
  Field f = gf2();
  TrellisBuilder b(f, 4, true, 2);
  b.add_edge(0, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(0, Vec(f, {0, 0}), 1, Vec(f, {0, 1}));
  b.add_edge(0, Vec(f, {0, 1}), 0, Vec(f, {0, 1}));
  b.add_edge(0, Vec(f, {0, 1}), 1, Vec(f, {0, 0}));
  b.add_edge(1, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(1, Vec(f, {0, 1}), 1, Vec(f, {1, 1}));
  b.add_edge(2, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(2, Vec(f, {1, 1}), 1, Vec(f, {0, 1}));
  b.add_edge(3, Vec(f, {0, 0}), 0, Vec(f, {0, 0}));
  b.add_edge(3, Vec(f, {0, 0}), 1, Vec(f, {0, 1}));
  b.add_edge(3, Vec(f, {0, 1}), 0, Vec(f, {0, 1}));
  b.add_edge(3, Vec(f, {0, 1}), 1, Vec(f, {0, 0}));
  return std::move(b).build();
}

// Independent kernel oracle (full enumeration over q^n vectors).
inline std::vector<Vec> brute_kernel(const Mat& m) {
  const Field f = m.field();
  const std::size_t n = m.cols();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f.q();
  std::vector<Vec> out;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v(f, n);
    std::size_t x = code;
    for (std::size_t i = 0; i < n; ++i) {
      v.set(i, static_cast<std::uint8_t>(x % f.q()));
      x /= f.q();
    }
    if (m.apply(v).is_zero()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Deterministic random parity matrices for property suites.
inline ParityCheckMatrix random_matrix(std::mt19937& rng, unsigned q,
                                       std::size_t rows, std::size_t cols) {
  Field f(q);
  Mat m(f, rows, cols);
  std::uniform_int_distribution<unsigned> digit(0, q - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, static_cast<std::uint8_t>(digit(rng)));
    }
  }
  return ParityCheckMatrix{m};
}

}  // namespace tbt::fixtures
