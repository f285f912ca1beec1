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

#include "tbt/embedding.hpp"

#include <algorithm>

namespace tbt {
namespace {

Vec stripped(const Vec& label) {
  Vec out(label.field(), label.size() - 1);
  for (std::size_t i = 1; i < label.size(); ++i) out.set(i - 1, label[i]);
  return out;
}

std::vector<Vec> sorted_union(std::vector<Vec> a, const Vec& extra) {
  a.push_back(extra);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Validation shared by dagger_matrix and embed, against the state space
// basis rather than a built trellis.
void validate_spec_against_basis(const std::vector<Vec>& vi_basis,
                                 const EmbeddingSpec& spec, std::size_t rows,
                                 std::size_t depth) {
  if (spec.index >= depth) {
    throw precondition_error("embedding index out of range");
  }
  if (spec.alpha.size() != rows) {
    throw precondition_error("alpha length does not match state space");
  }
  if (spec.alpha.is_zero()) throw precondition_error("alpha must be nonzero");
  if (!in_span(vi_basis, spec.alpha)) {
    throw precondition_error("alpha is not a state at the embedding index");
  }
  for (const Vec& hv : spec.hyperplane) {
    if (!in_span(vi_basis, hv)) {
      throw precondition_error("hyperplane vector outside the state space");
    }
  }
  const Field f = spec.alpha.field();
  std::size_t s_i = vi_basis.size();
  std::size_t hd = span_dim(spec.hyperplane, f, rows);
  if (hd + 1 != s_i) {
    throw precondition_error("hyperplane must have codimension 1");
  }
  if (in_span(spec.hyperplane, spec.alpha)) {
    throw precondition_error("alpha must avoid the hyperplane");
  }
}

}  // namespace

void validate_spec(const Trellis& t, const EmbeddingSpec& spec) {
  if (t.tail_biting()) {
    throw precondition_error("embedding operates on a conventional trellis");
  }
  std::vector<Vec> basis =
      span_basis(t.class_labels(spec.index), t.field(), t.label_len());
  validate_spec_against_basis(basis, spec, t.label_len(), t.depth());
  if (!t.find_vertex(spec.index, spec.alpha)) {
    throw precondition_error("alpha is not a vertex label at the index");
  }
}

ParityCheckMatrix extend_matrix(const ParityCheckMatrix& h, const Vec& alpha) {
  if (alpha.size() != h.rows()) {
    throw precondition_error("alpha length must equal the row count");
  }
  Mat out(h.field(), h.rows(), h.cols() + 2);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    out.set(r, 0, alpha[r]);
    for (std::size_t c = 0; c < h.cols(); ++c) out.set(r, c + 1, h.mat.at(r, c));
    out.set(r, h.cols() + 1, alpha[r]);
  }
  return ParityCheckMatrix{out};
}

Vec dagger_row(const ParityCheckMatrix& h_prime, std::size_t index,
               const Vec& phi) {
  if (phi.dot(h_prime.mat.col(0)) != 1) {
    throw precondition_error("phi(alpha) must be 1");
  }
  Vec row(h_prime.field(), h_prime.cols());
  for (std::size_t j = 0; j <= index && j < h_prime.cols(); ++j) {
    row.set(j, phi.dot(h_prime.mat.col(j)));
  }
  return row;
}

std::vector<Vec> subcode_ct(const ParityCheckMatrix& h_prime,
                            std::size_t index,
                            const std::vector<Vec>& hyperplane,
                            std::size_t cap) {
  const Field f = h_prime.field();
  std::vector<Vec> kept;
  for (const Vec& c : codewords(h_prime, cap)) {
    Vec syn(f, h_prime.rows());
    for (std::size_t j = 0; j <= index; ++j) {
      if (c[j]) syn = syn + h_prime.mat.col(j).scaled(c[j]);
    }
    if (in_span(hyperplane, syn)) kept.push_back(c);
  }
  return span_basis(kept, f, h_prime.cols());
}

ParityCheckMatrix dagger_matrix(const ParityCheckMatrix& h,
                                const EmbeddingSpec& spec, std::size_t cap) {
  validate_spec_against_basis(state_space_basis(h, spec.index), spec, h.rows(),
                              h.cols());
  ParityCheckMatrix h_prime = extend_matrix(h, spec.alpha);
  Vec phi = functional_for(spec.hyperplane, spec.alpha);
  Vec row = dagger_row(h_prime, spec.index, phi);

  Mat out(h.field(), h.rows() + 1, h.cols() + 2);
  for (std::size_t c = 0; c < out.cols(); ++c) out.set(0, c, row[c]);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      out.set(r + 1, c, h_prime.mat.at(r, c));
    }
  }
  ParityCheckMatrix h_dagger{out};

  if (rref(h_dagger.mat).rank != rref(h_prime.mat).rank + 1) {
    throw internal_error("constraint row did not raise the rank");
  }
  // Cross-check the kernel against the independent path-filter oracle.
  std::vector<Vec> oracle = subcode_ct(h_prime, spec.index, spec.hyperplane, cap);
  std::vector<Vec> kb = kernel_basis(h_dagger.mat);
  bool match = oracle.size() == kb.size();
  for (const Vec& v : kb) {
    if (!match) break;
    match = in_span(oracle, v);
  }
  if (!match) {
    throw internal_error("kernel of the extended matrix differs from the "
                         "path-filtered subcode");
  }
  return h_dagger;
}

EmbeddingResult embed(const ParityCheckMatrix& h, const EmbeddingSpec& spec,
                      std::size_t cap) {
  const std::size_t n = h.cols();
  ParityCheckMatrix h_prime = extend_matrix(h, spec.alpha);
  ParityCheckMatrix h_dagger = dagger_matrix(h, spec, cap);
  Trellis t_dagger = bcjr_construct(h_dagger, cap);

  // Stripping the constraint coordinate must stay injective per class, and
  // the two boundary classes must strip to the same label set.
  auto stripped_class = [&](std::size_t cls) {
    std::vector<Vec> out;
    for (const Vec& l : t_dagger.class_labels(cls)) out.push_back(stripped(l));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw internal_error("label stripping collided within a class");
    }
    return out;
  };
  if (stripped_class(1) != stripped_class(n + 1)) {
    throw internal_error("boundary label sets differ after stripping");
  }

  TrellisBuilder builder(h.field(), n, /*tail_biting=*/true, h.rows());
  for (std::size_t m = 0; m < n; ++m) {
    for (const Vec& l : t_dagger.class_labels(m + 1)) {
      builder.add_vertex(m, stripped(l));
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    // Section s+1 of the extended trellis becomes section s; the final
    // section's targets land in class 0 via their stripped labels.
    for (const TrellisEdge& e : t_dagger.section(s + 1)) {
      builder.add_edge(s, stripped(t_dagger.label(s + 1, e.from)), e.symbol,
                       stripped(t_dagger.label(s + 2, e.to)));
    }
  }
  Trellis tbt = std::move(builder).build();

  if (represented_code(tbt, cap) != codewords(h, cap)) {
    throw internal_error("embedding altered the represented code");
  }
  return EmbeddingResult{std::move(h_prime), std::move(h_dagger),
                         std::move(t_dagger), std::move(tbt)};
}

std::vector<EmbeddingSpec> enumerate_specs(const Trellis& t) {
  if (t.tail_biting()) {
    throw precondition_error("embedding operates on a conventional trellis");
  }
  std::vector<EmbeddingSpec> specs;
  for (std::size_t i = 1; i < t.depth(); ++i) {
    const std::vector<Vec>& labels = t.class_labels(i);
    if (labels.size() < 2) continue;  // V_i = {0} admits no nonzero alpha
    std::vector<Vec> basis = span_basis(labels, t.field(), t.label_len());
    for (const Vec& alpha : labels) {
      if (alpha.is_zero()) continue;
      for (auto& hyp : hyperplanes_avoiding(basis, alpha)) {
        specs.push_back(EmbeddingSpec{i, alpha, std::move(hyp)});
      }
    }
  }
  return specs;
}

std::vector<Vec> forward_states(const Trellis& t, std::size_t from,
                                const std::vector<Vec>& states,
                                std::size_t steps) {
  std::vector<char> cur(t.class_size(from), 0);
  for (const Vec& s : states) {
    auto idx = t.find_vertex(from, s);
    if (!idx) throw precondition_error("state is not a vertex of the class");
    cur[*idx] = 1;
  }
  std::size_t cls = from;
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t sec = t.tail_biting() ? cls % t.depth() : cls;
    if (sec >= t.depth()) throw precondition_error("walk leaves the trellis");
    std::size_t target = t.section_target(sec);
    std::vector<char> next(t.class_size(target), 0);
    for (const TrellisEdge& e : t.section(sec)) {
      if (cur[e.from]) next[e.to] = 1;
    }
    cur = std::move(next);
    cls = target;
  }
  std::vector<Vec> out;
  for (std::uint32_t i = 0; i < cur.size(); ++i) {
    if (cur[i]) out.push_back(t.label(cls, i));
  }
  return out;  // class labels are sorted already
}

StateSpacePrediction predict_state_space(const Trellis& t,
                                         const EmbeddingSpec& spec,
                                         std::size_t steps) {
  if (steps == 0 || spec.index + steps >= t.depth()) {
    throw precondition_error("prediction offset out of range");
  }
  validate_spec(t, spec);
  const Field f = t.field();
  const std::size_t len = t.label_len();

  std::vector<Vec> hyp_states =
      enumerate_span(spec.hyperplane, f, len, kDefaultEnumCap);
  std::vector<Vec> a = forward_states(t, spec.index, t.class_labels(spec.index),
                                      steps);
  std::vector<Vec> b = forward_states(t, spec.index, hyp_states, steps);
  std::vector<Vec> images = forward_states(t, spec.index, {spec.alpha}, steps);

  auto in_b = [&](const Vec& v) {
    return std::binary_search(b.begin(), b.end(), v);
  };
  StateSpacePrediction pred;
  if (a == b) {
    if (in_b(spec.alpha)) {
      pred.case_id = 1;
      pred.states = a;
    } else {
      pred.case_id = 2;
      std::vector<Vec> gens = sorted_union(a, spec.alpha);
      pred.states = enumerate_span(span_basis(gens, f, len), f, len);
    }
  } else {
    // Images of alpha are compared to alpha modulo B.
    std::vector<Vec> outside;
    for (const Vec& m : images) {
      if (!in_b(m - spec.alpha)) outside.push_back(m);
    }
    if (outside.empty()) {
      pred.case_id = 3;
      pred.states = b;
    } else {
      pred.case_id = 4;
      Vec witness = *std::min_element(outside.begin(), outside.end());
      std::vector<Vec> gens = sorted_union(b, witness - spec.alpha);
      pred.states = enumerate_span(span_basis(gens, f, len), f, len);
    }
  }
  return pred;
}

bool dimension_drop_check(const Trellis& t, const EmbeddingSpec& spec,
                          const EmbeddingResult& result) {
  StateComplexityProfile before = scp(t);
  StateComplexityProfile after = scp(result.tbt);
  if (!before.exact || !after.exact) return false;
  return after.dims[spec.index] == before.dims[spec.index] - 1;
}

}  // namespace tbt
