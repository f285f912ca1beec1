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

#include "tbt/peakreduce.hpp"

#include <algorithm>

namespace tbt {
namespace {

std::vector<Vec> intersect_sorted(const std::vector<Vec>& a,
                                  const std::vector<Vec>& b) {
  std::vector<Vec> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool sides_below(const std::vector<std::size_t>& sizes, std::size_t p,
                 std::size_t plateau_len) {
  std::size_t bound = sizes[p - 1];
  // Classes strictly before the left shoulder and strictly after the right
  // shoulder must sit strictly below |V_{p-1}|; class `depth` (the single
  // goal vertex) is outside the profile's index range.
  std::size_t n = sizes.size() - 1;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (sizes[i] >= bound) return false;
  }
  for (std::size_t i = p + plateau_len + 1; i < n; ++i) {
    if (sizes[i] >= bound) return false;
  }
  return true;
}

}  // namespace

const char* peak_kind_name(PeakKind kind) {
  switch (kind) {
    case PeakKind::single: return "single";
    case PeakKind::plateau2: return "plateau2";
    case PeakKind::plateau3_equal: return "plateau3-equal";
    case PeakKind::plateau3_unequal: return "plateau3-unequal";
  }
  return "?";
}

std::optional<PeakPattern> classify_peak(const Trellis& t) {
  if (t.field().q() != 2) {
    throw precondition_error("peak patterns are defined for binary codes");
  }
  if (t.tail_biting()) {
    throw precondition_error("peak classification expects a conventional "
                             "trellis");
  }
  const std::size_t n = t.depth();
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c <= n; ++c) sizes.push_back(t.class_size(c));

  for (std::size_t p = 2; p + 1 < n; ++p) {
    if (!(sizes[p] > sizes[p - 1])) continue;

    if (sizes[p] > sizes[p + 1]) {
      if (!sides_below(sizes, p, 1)) continue;
      PeakPattern pat{PeakKind::single, p, 1, 4, sizes[p - 1] >= 4};
      return pat;
    }
    if (p + 2 < n && sizes[p] == sizes[p + 1] && sizes[p + 1] > sizes[p + 2]) {
      if (!sides_below(sizes, p, 2)) continue;
      PeakPattern pat{PeakKind::plateau2, p, 2, 8, sizes[p - 1] >= 8};
      return pat;
    }
    if (p + 3 < n && sizes[p] == sizes[p + 1] && sizes[p + 1] == sizes[p + 2] &&
        sizes[p + 2] > sizes[p + 3]) {
      if (!sides_below(sizes, p, 3)) continue;
      bool equal_sets = t.class_labels(p) == t.class_labels(p + 1) &&
                        t.class_labels(p + 1) == t.class_labels(p + 2);
      PeakPattern pat;
      pat.kind = equal_sets ? PeakKind::plateau3_equal
                            : PeakKind::plateau3_unequal;
      pat.p = p;
      pat.plateau_len = 3;
      pat.guard_floor = equal_sets ? 8 : 16;
      pat.guard_ok = sizes[p - 1] >= pat.guard_floor;
      return pat;
    }
  }
  return std::nullopt;
}

namespace {

// Candidate generation shared by the verified and best-effort tiers.
struct Recipe {
  std::vector<Vec> alphas;           // sorted nonzero intersection states
  std::vector<Vec> required_cols;    // plateau columns lying in span(V_p)
  std::vector<Vec> vp_basis;
  std::size_t s_p = 0;
};

Recipe build_recipe(const Trellis& t, const ParityCheckMatrix& h,
                    const PeakPattern& pattern) {
  Recipe r;
  const std::size_t p = pattern.p;
  std::vector<Vec> common = t.class_labels(p - 1);
  for (std::size_t j = p; j <= p + pattern.plateau_len; ++j) {
    common = intersect_sorted(common, t.class_labels(j));
  }
  for (const Vec& v : common) {
    if (!v.is_zero()) r.alphas.push_back(v);
  }
  r.vp_basis = span_basis(t.class_labels(p), t.field(), t.label_len());
  r.s_p = r.vp_basis.size();
  for (std::size_t step = 1; step < pattern.plateau_len; ++step) {
    // Section p+step-1 crosses the plateau on column index p+step-1.
    Vec col = h.mat.col(p + step - 1);
    if (in_span(r.vp_basis, col) && !col.is_zero()) r.required_cols.push_back(col);
  }
  return r;
}

bool stability_ok(const Trellis& t, const PeakPattern& pattern,
                  const Vec& alpha, const std::vector<Vec>& hyperplane,
                  std::size_t s_p) {
  const Field f = t.field();
  const std::size_t len = t.label_len();
  std::vector<Vec> hyp_states = enumerate_span(hyperplane, f, len);
  for (std::size_t step = 1; step < pattern.plateau_len; ++step) {
    std::vector<Vec> image = forward_states(t, pattern.p, hyp_states, step);
    if (span_dim(image, f, len) + 1 != s_p) return false;
    std::vector<Vec> alpha_images = forward_states(t, pattern.p, {alpha}, step);
    for (const Vec& m : alpha_images) {
      if (!std::binary_search(image.begin(), image.end(), m - alpha)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<EmbeddingSpec> find_alpha(const Trellis& t,
                                        const ParityCheckMatrix& h,
                                        const PeakPattern& pattern) {
  if (t.field().q() != 2) {
    throw precondition_error("peak reduction is defined for binary codes");
  }
  Recipe recipe = build_recipe(t, h, pattern);
  for (const Vec& alpha : recipe.alphas) {
    bool alpha_is_required =
        std::find(recipe.required_cols.begin(), recipe.required_cols.end(),
                  alpha) != recipe.required_cols.end();
    if (alpha_is_required) continue;
    for (auto& hyp : hyperplanes_avoiding(recipe.vp_basis, alpha)) {
      bool contains_required = true;
      for (const Vec& col : recipe.required_cols) {
        if (!in_span(hyp, col)) {
          contains_required = false;
          break;
        }
      }
      if (!contains_required) continue;
      if (!stability_ok(t, pattern, alpha, hyp, recipe.s_p)) continue;
      return EmbeddingSpec{pattern.p, alpha, std::move(hyp)};
    }
  }
  return std::nullopt;
}

PeakReduceResult reduce_peak(const ParityCheckMatrix& h, std::size_t cap) {
  if (h.field().q() != 2) {
    throw precondition_error("peak reduction is defined for binary codes");
  }
  Trellis t = bcjr_construct(h, cap);
  std::optional<PeakPattern> pattern = classify_peak(t);
  if (!pattern) {
    throw precondition_error("no peak pattern in the state profile");
  }
  PeakReduceResult out;
  out.pattern = *pattern;
  out.s_max_before = scp(t).s_max;

  std::optional<EmbeddingSpec> spec = find_alpha(t, h, *pattern);
  if (!spec) {
    // Best effort: drop the stability verification and take the first
    // intersection state with a constraint-satisfying hyperplane.
    Recipe recipe = build_recipe(t, h, *pattern);
    for (const Vec& alpha : recipe.alphas) {
      for (auto& hyp : hyperplanes_avoiding(recipe.vp_basis, alpha)) {
        bool contains_required = true;
        for (const Vec& col : recipe.required_cols) {
          if (!in_span(hyp, col)) {
            contains_required = false;
            break;
          }
        }
        if (contains_required) {
          spec = EmbeddingSpec{pattern->p, alpha, std::move(hyp)};
          break;
        }
      }
      if (spec) break;
    }
  }
  if (!spec) return out;

  out.attempted = true;
  out.spec = spec;
  out.embedding = embed(h, *spec, cap);
  out.s_max_after = scp(out.embedding->tbt).s_max;
  out.succeeded = out.s_max_after == out.s_max_before - 1;
  return out;
}

bool out_degrees_uniform_one_or_two(const Trellis& t) {
  for (int d : out_degree_profile(t).degrees) {
    if (d != 1 && d != 2) return false;
  }
  return true;
}

std::vector<Vec> preimage_states(const Trellis& t, std::size_t cls,
                                 const std::vector<Vec>& targets,
                                 std::size_t steps) {
  std::vector<Vec> out;
  for (const Vec& s : t.class_labels(cls)) {
    std::vector<Vec> images = forward_states(t, cls, {s}, steps);
    bool inside = !images.empty();
    for (const Vec& m : images) {
      if (!std::binary_search(targets.begin(), targets.end(), m)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(s);
  }
  return out;
}

}  // namespace tbt
