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

#include "tbt/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tbt {
namespace {

Vec strip_front(const Vec& label, std::size_t k) {
  Vec out(label.field(), label.size() - k);
  for (std::size_t i = k; i < label.size(); ++i) out.set(i - k, label[i]);
  return out;
}

// Kernel words of an extended matrix with the wrapper coordinates dropped.
// This is a superset of the original code: the extended kernel also holds
// words whose wrapper symbols do not cancel, and the induced trellis's
// cycle rule is what filters those out.
std::vector<Vec> stripped_kernel(const ParityCheckMatrix& extended,
                                 std::size_t wraps, std::size_t cap) {
  const std::size_t n = extended.cols() - 2 * wraps;
  std::vector<Vec> out;
  for (const Vec& w : codewords(extended, cap)) {
    Vec c(extended.field(), n);
    for (std::size_t j = 0; j < n; ++j) c.set(j, w[wraps + j]);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains_all(const std::vector<Vec>& superset,
                  const std::vector<Vec>& subset) {
  return std::includes(superset.begin(), superset.end(), subset.begin(),
                       subset.end());
}

}  // namespace

Trellis induced_tbt(const ParityCheckMatrix& extended, std::size_t wraps,
                    std::size_t cap) {
  if (extended.cols() < 2 * wraps + 1) {
    throw precondition_error("matrix too narrow for the wrap count");
  }
  if (extended.rows() < wraps + 1) {
    throw precondition_error("matrix too shallow for the wrap count");
  }
  const std::size_t n = extended.cols() - 2 * wraps;
  const std::size_t label_len = extended.rows() - wraps;
  Trellis t = bcjr_construct(extended, cap);

  auto stripped_class = [&](std::size_t cls) {
    std::vector<Vec> out;
    for (const Vec& l : t.class_labels(cls)) {
      out.push_back(strip_front(l, wraps));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw internal_error("label stripping collided within a class");
    }
    return out;
  };
  if (stripped_class(wraps) != stripped_class(n + wraps)) {
    throw internal_error("boundary label sets differ after stripping");
  }

  TrellisBuilder builder(extended.field(), n, /*tail_biting=*/true, label_len);
  for (std::size_t m = 0; m < n; ++m) {
    for (const Vec& l : t.class_labels(wraps + m)) {
      builder.add_vertex(m, strip_front(l, wraps));
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (const TrellisEdge& e : t.section(wraps + s)) {
      builder.add_edge(s, strip_front(t.label(wraps + s, e.from), wraps),
                       e.symbol,
                       strip_front(t.label(wraps + s + 1, e.to), wraps));
    }
  }
  return std::move(builder).build();
}

std::string canonical_signature(const Trellis& t) {
  const std::size_t nc = t.num_classes();
  std::vector<std::vector<std::uint64_t>> color(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    color[c].assign(t.class_size(c), c);
  }
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  for (std::size_t round = 0; round < t.depth() + 2; ++round) {
    std::vector<std::vector<std::uint64_t>> next(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      next[c].assign(t.class_size(c), 0);
      for (std::size_t v = 0; v < t.class_size(c); ++v) {
        next[c][v] = mix(0, color[c][v]);
      }
    }
    for (std::size_t s = 0; s < t.depth(); ++s) {
      std::size_t target = t.section_target(s);
      // Sorted edge order keeps the accumulation deterministic; the mixes
      // below are order-sensitive, so fold sorted contribution lists.
      std::vector<std::vector<std::uint64_t>> outc(t.class_size(s));
      std::vector<std::vector<std::uint64_t>> inc(t.class_size(target));
      for (const TrellisEdge& e : t.section(s)) {
        outc[e.from].push_back(mix(e.symbol + 1, color[target][e.to]));
        inc[e.to].push_back(mix((e.symbol + 1) << 8, color[s][e.from]));
      }
      for (std::size_t v = 0; v < outc.size(); ++v) {
        std::sort(outc[v].begin(), outc[v].end());
        for (std::uint64_t x : outc[v]) next[s][v] = mix(next[s][v], x);
      }
      for (std::size_t v = 0; v < inc.size(); ++v) {
        std::sort(inc[v].begin(), inc[v].end());
        for (std::uint64_t x : inc[v]) next[target][v] = mix(next[target][v], x);
      }
    }
    color = std::move(next);
  }
  std::ostringstream os;
  os << (t.tail_biting() ? "tbt" : "conv") << ':' << t.depth() << ':'
     << t.field().q();
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<std::uint64_t> sorted = color[c];
    std::sort(sorted.begin(), sorted.end());
    os << '|';
    for (std::uint64_t x : sorted) os << std::hex << x << ',';
  }
  return std::move(os).str();
}

SearchResult minimize_tbt(const ParityCheckMatrix& h,
                          const SearchOptions& options) {
  const std::size_t n = h.cols();
  if (n > options.max_code_length) {
    throw precondition_error("code length exceeds the search cap");
  }
  if (options.max_embeddings > 0 && h.field().q() != 2 && n > 6) {
    throw precondition_error("exhaustive search beyond length 6 is binary-only");
  }
  const std::vector<Vec> original = codewords(h, options.cap);
  const bool beam_active = n > 6 && options.beam > 0;

  struct Node {
    SearchState state;
    Trellis trellis;
  };
  auto better = [](const Node& a, const Node& b) {
    if (a.state.induced_scp.s_max_size != b.state.induced_scp.s_max_size) {
      return a.state.induced_scp.s_max_size < b.state.induced_scp.s_max_size;
    }
    if (a.state.induced_scp.sizes != b.state.induced_scp.sizes) {
      return a.state.induced_scp.sizes < b.state.induced_scp.sizes;
    }
    return a.state.embeddings < b.state.embeddings;
  };

  Trellis t0 = induced_tbt(h, 0, options.cap);
  Node root{SearchState{h, 0, {}, scp(t0)}, t0};
  SearchResult result{root.state, root.trellis, true, 1};

  std::map<std::string, std::vector<Trellis>> seen;
  seen[canonical_signature(t0)].push_back(t0);

  std::vector<Node> frontier;
  frontier.push_back(std::move(root));

  for (std::size_t level = 1; level <= options.max_embeddings; ++level) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      Trellis conv = bcjr_construct(node.state.matrix, options.cap);
      for (EmbeddingSpec& spec : enumerate_specs(conv)) {
        EmbeddingResult emb = embed(node.state.matrix, spec, options.cap);
        std::size_t wraps = node.state.embeddings + 1;
        Trellis tbt = induced_tbt(emb.h_dagger, wraps, options.cap);
        // Every expansion must keep the original code intact: the stripped
        // kernel still covers it and the induced cycles spell exactly it.
        if (!contains_all(stripped_kernel(emb.h_dagger, wraps, options.cap),
                          original) ||
            represented_code(tbt, options.cap) != original) {
          throw internal_error("expansion altered the represented code");
        }
        ++result.explored;

        std::string sig = canonical_signature(tbt);
        auto& reps = seen[sig];
        bool duplicate = false;
        for (const Trellis& rep : reps) {
          if (isomorphic(rep, tbt)) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        reps.push_back(tbt);

        std::vector<EmbeddingSpec> trace = node.state.trace;
        trace.push_back(std::move(spec));
        next.push_back(Node{SearchState{emb.h_dagger, wraps, std::move(trace),
                                        scp(tbt)},
                            std::move(tbt)});
      }
    }
    std::stable_sort(next.begin(), next.end(), better);
    if (beam_active && next.size() > options.beam) {
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(options.beam),
                 next.end());
      result.exhaustive = false;
    }
    for (const Node& node : next) {
      if (better(node, Node{result.best, result.best_trellis})) {
        result.best = node.state;
        result.best_trellis = node.trellis;
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return result;
}

Trellis replay(const ParityCheckMatrix& h,
               const std::vector<EmbeddingSpec>& trace, std::size_t cap) {
  ParityCheckMatrix m = h;
  for (const EmbeddingSpec& spec : trace) {
    m = embed(m, spec, cap).h_dagger;
  }
  return induced_tbt(m, trace.size(), cap);
}

}  // namespace tbt
