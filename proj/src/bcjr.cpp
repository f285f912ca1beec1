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

#include "tbt/bcjr.hpp"

#include <algorithm>

namespace tbt {

std::vector<Vec> codewords(const ParityCheckMatrix& h, std::size_t cap) {
  std::vector<Vec> basis = kernel_basis(h.mat);
  return enumerate_span(basis, h.field(), h.cols(), cap);
}

Trellis bcjr_construct(const ParityCheckMatrix& h, std::size_t cap) {
  const Field f = h.field();
  const std::size_t n = h.cols();
  const std::size_t r = h.rows();
  if (n == 0) throw precondition_error("parity check matrix has no columns");

  std::vector<Vec> code = codewords(h, cap);
  std::vector<Vec> columns;
  columns.reserve(n);
  for (std::size_t j = 0; j < n; ++j) columns.push_back(h.mat.col(j));

  TrellisBuilder builder(f, n, /*tail_biting=*/false, r);
  builder.add_vertex(0, Vec(f, r));
  for (const Vec& c : code) {
    Vec syn(f, r);
    for (std::size_t j = 0; j < n; ++j) {
      Vec next = syn + columns[j].scaled(c[j]);
      builder.add_edge(j, syn, c[j], next);
      syn = next;
    }
  }
  return std::move(builder).build();
}

std::vector<Vec> state_space_basis(const ParityCheckMatrix& h, std::size_t i) {
  if (i > h.cols()) throw precondition_error("time index out of range");
  const Field f = h.field();
  std::vector<Vec> images;
  for (const Vec& b : kernel_basis(h.mat)) {
    Vec syn(f, h.rows());
    for (std::size_t j = 0; j < i; ++j) {
      if (b[j]) syn = syn + h.mat.col(j).scaled(b[j]);
    }
    images.push_back(syn);
  }
  return span_basis(images, f, h.rows());
}

MinimalitySignature check_bcjr_minimality_signature(const ParityCheckMatrix& h,
                                                    std::size_t cap) {
  Trellis t = bcjr_construct(h, cap);
  MinimalitySignature sig;
  sig.reduced = is_reduced(t);
  sig.biproper = is_biproper(t);
  sig.nonmergeable = !is_mergeable(t, cap).mergeable;
  sig.linear = is_linear(t, cap);

  RrefResult rr = rref(h.mat);
  // Drop zero rows so the comparison matrix has full row rank; the label
  // spaces differ but the layered structure must not.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < rr.rank; ++i) rows.push_back(rr.reduced.row(i));
  if (rows.empty()) {
    rows.push_back(Vec(h.field(), h.cols()));  // zero matrix: keep one row
  }
  Trellis canon = bcjr_construct(ParityCheckMatrix{Mat::from_rows(rows)}, cap);
  // Label spaces may differ in length (redundant rows dropped); the
  // symbol-preserving layered isomorphism is exactly the uniqueness claim.
  sig.row_space_invariant = isomorphic(t, canon);
  return sig;
}

}  // namespace tbt
