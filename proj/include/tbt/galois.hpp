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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tbt/errors.hpp"

namespace tbt {

// Default cap on the number of elements any enumeration may produce.
inline constexpr std::size_t kDefaultEnumCap = std::size_t{1} << 20;

// A prime field GF(q). Element values are plain integers in [0, q).
class Field {
 public:
  explicit Field(unsigned q);

  unsigned q() const { return q_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + b) % q_);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + q_ - b) % q_);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a * b) % q_);
  }
  std::uint8_t neg(std::uint8_t a) const {
    return static_cast<std::uint8_t>((q_ - a) % q_);
  }
  std::uint8_t inv(std::uint8_t a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  unsigned q_;
};

// Fixed-length vector over a prime field. Immutable length, value semantics,
// lexicographic ordering on digits.
class Vec {
 public:
  Vec(Field f, std::size_t n) : field_(f), v_(n, 0) {}
  Vec(Field f, std::initializer_list<int> digits);
  static Vec from_digits(Field f, const std::string& digits);

  std::size_t size() const { return v_.size(); }
  Field field() const { return field_; }
  std::uint8_t operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, std::uint8_t value);

  bool is_zero() const;
  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(std::uint8_t c) const;
  std::uint8_t dot(const Vec& o) const;

  // Digits concatenated most-significant-row-first, e.g. (1,1,0) -> "110".
  std::string digits() const;

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b);

 private:
  Field field_;
  std::vector<std::uint8_t> v_;
};

// Dense row-major matrix over a prime field.
class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  static Mat from_rows(Field f, const std::vector<std::vector<int>>& rows);
  static Mat from_rows(const std::vector<Vec>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint8_t value);

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  // Matrix-vector product m * v for a length-cols vector.
  Vec apply(const Vec& v) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> e_;
};

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row-echelon form. Row space preserved; rank = nonzero rows.
// GF(2) inputs take a bit-packed elimination path; other primes use digit
// arithmetic. Both produce identical results.
RrefResult rref(const Mat& m);

namespace detail {
// Digit-array elimination, usable for any prime including 2. Exposed so
// tests can cross-check the packed GF(2) path against it.
RrefResult rref_generic(const Mat& m);
}  // namespace detail

// Basis of the right kernel {v : m * v = 0}, sorted lexicographically.
std::vector<Vec> kernel_basis(const Mat& m);

// All q^k vectors spanned by an independent basis, sorted lexicographically.
// `f`/`len` describe the ambient space (needed when the basis is empty).
std::vector<Vec> enumerate_span(std::span<const Vec> basis, Field f,
                                std::size_t len,
                                std::size_t cap = kDefaultEnumCap);

// Canonical (RREF-row) basis of the span of arbitrary vectors.
std::vector<Vec> span_basis(std::span<const Vec> vecs, Field f,
                            std::size_t len);

std::size_t span_dim(std::span<const Vec> vecs, Field f, std::size_t len);

// Membership of v in the span of `basis`.
bool in_span(std::span<const Vec> basis, const Vec& v);

// The lexicographically smallest row vector phi with phi.v = 0 for every v
// in the hyperplane and phi.alpha = 1.
Vec functional_for(std::span<const Vec> hyperplane_basis, const Vec& alpha);

// All codimension-1 subspaces of span(space_basis) that avoid alpha, each as
// a canonical RREF basis. There are exactly q^(dim-1) of them. The list is
// ordered by the normalized separating functional of each hyperplane
// (functional_for), which makes downstream constructions reproducible.
std::vector<std::vector<Vec>> hyperplanes_avoiding(
    std::span<const Vec> space_basis, const Vec& alpha);

}  // namespace tbt
