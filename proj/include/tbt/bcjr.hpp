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

#include "tbt/galois.hpp"
#include "tbt/trellis.hpp"

namespace tbt {

// Parity check matrix of a linear block code C = {c : H c^T = 0}. Rank
// deficiency is allowed; the labels of the syndrome trellis keep all r rows
// either way.
struct ParityCheckMatrix {
  Mat mat;

  std::size_t rows() const { return mat.rows(); }
  std::size_t cols() const { return mat.cols(); }
  Field field() const { return mat.field(); }

  friend bool operator==(const ParityCheckMatrix&,
                         const ParityCheckMatrix&) = default;
};

// Codewords of ker(H), sorted. Subject to the enumeration cap.
std::vector<Vec> codewords(const ParityCheckMatrix& h,
                           std::size_t cap = kDefaultEnumCap);

// The minimal conventional trellis for ker(H): class i holds the partial
// syndromes H_{1..i} c_{1..i}^T of codeword prefixes, each vertex labeled by
// its syndrome; an edge (s, a, s + a h_{i+1}) exists whenever some codeword
// realizes it. Reduced, biproper, nonmergeable and linear by construction.
Trellis bcjr_construct(const ParityCheckMatrix& h,
                       std::size_t cap = kDefaultEnumCap);

// Canonical basis of the state space V_i (partial syndromes at time i)
// without building the trellis.
std::vector<Vec> state_space_basis(const ParityCheckMatrix& h, std::size_t i);

struct MinimalitySignature {
  bool reduced = false;
  bool biproper = false;
  bool nonmergeable = false;
  bool linear = false;
  bool row_space_invariant = false;  // isomorphic to the RREF-matrix trellis
  bool all() const {
    return reduced && biproper && nonmergeable && linear && row_space_invariant;
  }
};

// Runs the structural checks that pin down the minimal trellis: reduced,
// biproper, nonmergeable, linear, and isomorphism with the trellis of any
// row-space-equivalent matrix (checked against the RREF of H).
MinimalitySignature check_bcjr_minimality_signature(
    const ParityCheckMatrix& h, std::size_t cap = kDefaultEnumCap);

}  // namespace tbt
