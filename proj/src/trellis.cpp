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

#include "tbt/trellis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace tbt {
namespace {

// Index-level view of a trellis used by the path enumerators, so that
// merged variants can be explored without rebuilding a Trellis.
struct FlatGraph {
  std::size_t depth = 0;
  bool tail_biting = false;
  std::size_t num_classes = 0;
  std::vector<std::size_t> class_size;
  // adj[s][from] = sorted list of (symbol, to).
  std::vector<std::vector<std::vector<std::pair<std::uint8_t, std::uint32_t>>>>
      adj;
};

FlatGraph flatten(const Trellis& t) {
  FlatGraph g;
  g.depth = t.depth();
  g.tail_biting = t.tail_biting();
  g.num_classes = t.num_classes();
  g.class_size.resize(g.num_classes);
  for (std::size_t c = 0; c < g.num_classes; ++c) {
    g.class_size[c] = t.class_size(c);
  }
  g.adj.resize(g.depth);
  for (std::size_t s = 0; s < g.depth; ++s) {
    g.adj[s].resize(t.class_size(s));
    for (const TrellisEdge& e : t.section(s)) {
      g.adj[s][e.from].emplace_back(e.symbol, e.to);
    }
  }
  return g;
}

// Fuse vertex v of class cls into vertex u (u < v): all edges incident on v
// are re-attached to u, indices above v shift down by one.
FlatGraph merge_vertices(const FlatGraph& g, std::size_t cls, std::uint32_t u,
                         std::uint32_t v) {
  FlatGraph m = g;
  m.class_size[cls] -= 1;
  auto remap = [&](std::size_t c, std::uint32_t x) -> std::uint32_t {
    if (c != cls) return x;
    if (x == v) return u;
    return x > v ? x - 1 : x;
  };
  for (std::size_t s = 0; s < g.depth; ++s) {
    std::size_t target = g.tail_biting ? (s + 1) % g.depth : s + 1;
    std::vector<std::vector<std::pair<std::uint8_t, std::uint32_t>>> adj(
        m.class_size[s]);
    for (std::uint32_t from = 0; from < g.adj[s].size(); ++from) {
      for (auto [sym, to] : g.adj[s][from]) {
        adj[remap(s, from)].emplace_back(sym, remap(target, to));
      }
    }
    for (auto& lst : adj) {
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    m.adj[s] = std::move(adj);
  }
  return m;
}

// Enumerates edge-symbol sequences of all full paths (conventional) or
// closed cycles from class 0 (tail-biting). Invokes visit(symbols, path)
// where path holds the visited vertex indices, one per section start.
template <typename Visit>
void enumerate_paths(const FlatGraph& g, std::size_t cap, Visit&& visit) {
  if (g.num_classes == 0) return;
  std::vector<std::uint8_t> symbols(g.depth, 0);
  std::vector<std::uint32_t> path(g.depth + 1, 0);
  std::size_t steps = 0;
  const std::size_t step_cap =
      cap > std::size_t(-1) / (g.depth + 2) ? std::size_t(-1)
                                            : cap * (g.depth + 2);

  std::function<void(std::size_t, std::uint32_t, std::uint32_t)> dfs =
      [&](std::size_t layer, std::uint32_t at, std::uint32_t start) {
        if (++steps > step_cap) {
          throw cap_error("path enumeration exceeds cap");
        }
        if (layer == g.depth) {
          bool closed = g.tail_biting ? at == start : true;
          if (closed) {
            path[layer] = at;
            visit(symbols, path);
          }
          return;
        }
        path[layer] = at;
        for (auto [sym, to] : g.adj[layer][at]) {
          symbols[layer] = sym;
          dfs(layer + 1, to, start);
        }
      };

  if (g.tail_biting) {
    for (std::uint32_t v0 = 0; v0 < g.class_size[0]; ++v0) dfs(0, v0, v0);
  } else {
    dfs(0, 0, 0);
  }
}

std::vector<Vec> code_of(const FlatGraph& g, Field f, std::size_t cap) {
  std::vector<Vec> out;
  enumerate_paths(g, cap, [&](const std::vector<std::uint8_t>& symbols,
                              const std::vector<std::uint32_t>&) {
    if (out.size() >= cap) throw cap_error("represented code exceeds cap");
    Vec w(f, symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) w.set(i, symbols[i]);
    out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<std::uint32_t> Trellis::find_vertex(std::size_t cls,
                                                  const Vec& label) const {
  const auto& labels = classes_[cls];
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || !(*it == label)) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels.begin());
}

TrellisBuilder::TrellisBuilder(Field f, std::size_t depth, bool tail_biting,
                               std::size_t label_len)
    : field_(f),
      depth_(depth),
      tail_biting_(tail_biting),
      label_len_(label_len) {
  if (depth == 0) throw precondition_error("trellis depth must be positive");
  verts_.resize(tail_biting ? depth : depth + 1);
  edges_.resize(depth);
}

void TrellisBuilder::add_vertex(std::size_t cls, const Vec& label) {
  if (cls >= verts_.size()) throw precondition_error("class index out of range");
  if (label.size() != label_len_ || !(label.field() == field_)) {
    throw precondition_error("label does not match trellis label space");
  }
  auto& vs = verts_[cls];
  if (std::find(vs.begin(), vs.end(), label) == vs.end()) vs.push_back(label);
}

void TrellisBuilder::add_edge(std::size_t section, const Vec& from,
                              std::uint8_t symbol, const Vec& to) {
  if (section >= depth_) throw precondition_error("section index out of range");
  if (symbol >= field_.q()) throw precondition_error("symbol out of range");
  std::size_t target = tail_biting_ ? (section + 1) % depth_ : section + 1;
  add_vertex(section, from);
  add_vertex(target, to);
  edges_[section].push_back(LabeledEdge{from, symbol, to});
}

Trellis TrellisBuilder::build() && {
  Trellis t;
  t.field_ = field_;
  t.depth_ = depth_;
  t.tail_biting_ = tail_biting_;
  t.label_len_ = label_len_;
  t.classes_.resize(verts_.size());
  std::vector<std::map<Vec, std::uint32_t>> index(verts_.size());
  for (std::size_t c = 0; c < verts_.size(); ++c) {
    if (verts_[c].empty()) {
      throw precondition_error("trellis class " + std::to_string(c) +
                               " is empty");
    }
    std::sort(verts_[c].begin(), verts_[c].end());
    t.classes_[c] = verts_[c];
    for (std::uint32_t i = 0; i < verts_[c].size(); ++i) {
      index[c].emplace(verts_[c][i], i);
    }
  }
  if (!tail_biting_) {
    if (t.classes_.front().size() != 1 || t.classes_.back().size() != 1) {
      throw precondition_error(
          "conventional trellis needs single root and goal vertices");
    }
  }
  t.sections_.resize(depth_);
  for (std::size_t s = 0; s < depth_; ++s) {
    std::size_t target = t.section_target(s);
    auto& out = t.sections_[s];
    out.reserve(edges_[s].size());
    for (const LabeledEdge& e : edges_[s]) {
      out.push_back(TrellisEdge{index[s].at(e.from), e.symbol,
                                index[target].at(e.to)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return t;
}

StateComplexityProfile scp(const Trellis& t) {
  StateComplexityProfile p;
  const unsigned q = t.field().q();
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    std::size_t size = t.class_size(c);
    p.sizes.push_back(size);
    int dim = 0;
    std::size_t pw = 1;
    while (pw < size) {
      pw *= q;
      ++dim;
    }
    if (pw == size) {
      p.dims.push_back(dim);
      p.s_max = std::max(p.s_max, dim);
    } else {
      p.dims.push_back(-1);
      p.exact = false;
    }
    p.s_max_size = std::max(p.s_max_size, size);
  }
  return p;
}

std::vector<Vec> represented_code(const Trellis& t, std::size_t cap) {
  return code_of(flatten(t), t.field(), cap);
}

std::vector<Vec> label_code(const Trellis& t, std::size_t cap) {
  const std::size_t r = t.label_len();
  const std::size_t seq_len = t.depth() * (r + 1);
  std::vector<Vec> out;
  enumerate_paths(
      flatten(t), cap,
      [&](const std::vector<std::uint8_t>& symbols,
          const std::vector<std::uint32_t>& path) {
        if (out.size() >= cap) throw cap_error("label code exceeds cap");
        Vec seq(t.field(), seq_len);
        std::size_t pos = 0;
        for (std::size_t s = 0; s < t.depth(); ++s) {
          const Vec& vl = t.label(s, path[s]);
          for (std::size_t j = 0; j < r; ++j) seq.set(pos++, vl[j]);
          seq.set(pos++, symbols[s]);
        }
        out.push_back(seq);
      });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_linear(const Trellis& t, std::size_t cap) {
  std::vector<Vec> s = label_code(t, cap);
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::binary_search(s.begin(), s.end(), s[i] + s[j])) return false;
    }
  }
  return true;
}

bool is_biproper(const Trellis& t) {
  for (std::size_t s = 0; s < t.depth(); ++s) {
    const auto& edges = t.section(s);
    // Edges are sorted by (from, symbol, to): duplicate out-symbols are
    // adjacent.
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i].from == edges[i - 1].from &&
          edges[i].symbol == edges[i - 1].symbol) {
        return false;
      }
    }
    std::vector<std::pair<std::uint32_t, std::uint8_t>> in;
    in.reserve(edges.size());
    for (const TrellisEdge& e : edges) in.emplace_back(e.to, e.symbol);
    std::sort(in.begin(), in.end());
    if (std::adjacent_find(in.begin(), in.end()) != in.end()) return false;
  }
  return true;
}

bool is_reduced(const Trellis& t) {
  FlatGraph g = flatten(t);
  std::vector<std::vector<char>> on_cycle(g.num_classes);
  for (std::size_t c = 0; c < g.num_classes; ++c) {
    on_cycle[c].assign(g.class_size[c], 0);
  }

  // Unrolled layers 0..depth; layer depth maps back onto class 0 for
  // tail-biting trellises.
  auto mark_from = [&](std::uint32_t start) {
    std::vector<std::vector<char>> fwd(g.depth + 1), bwd(g.depth + 1);
    for (std::size_t l = 0; l <= g.depth; ++l) {
      std::size_t cls = g.tail_biting ? l % g.depth : l;
      fwd[l].assign(g.class_size[cls], 0);
      bwd[l].assign(g.class_size[cls], 0);
    }
    fwd[0][start] = 1;
    for (std::size_t l = 0; l < g.depth; ++l) {
      for (std::uint32_t v = 0; v < fwd[l].size(); ++v) {
        if (!fwd[l][v]) continue;
        for (auto [sym, to] : g.adj[l][v]) fwd[l + 1][to] = 1;
      }
    }
    std::uint32_t goal = g.tail_biting ? start : 0;
    if (!fwd[g.depth][goal]) return;
    bwd[g.depth][goal] = 1;
    for (std::size_t l = g.depth; l-- > 0;) {
      for (std::uint32_t v = 0; v < bwd[l].size(); ++v) {
        for (auto [sym, to] : g.adj[l][v]) {
          if (bwd[l + 1][to]) {
            bwd[l][v] = 1;
            break;
          }
        }
      }
    }
    for (std::size_t l = 0; l < g.depth; ++l) {
      std::size_t cls = g.tail_biting ? l % g.depth : l;
      for (std::uint32_t v = 0; v < fwd[l].size(); ++v) {
        if (fwd[l][v] && bwd[l][v]) on_cycle[cls][v] = 1;
      }
    }
    if (!g.tail_biting) {
      if (fwd[g.depth][0] && bwd[g.depth][0]) on_cycle[g.depth][0] = 1;
    }
  };

  if (g.tail_biting) {
    for (std::uint32_t v0 = 0; v0 < g.class_size[0]; ++v0) mark_from(v0);
  } else {
    mark_from(0);
  }
  for (const auto& cls : on_cycle) {
    for (char c : cls) {
      if (!c) return false;
    }
  }
  return true;
}

MergeWitness is_mergeable(const Trellis& t, std::size_t cap) {
  FlatGraph g = flatten(t);
  std::vector<Vec> base = code_of(g, t.field(), cap);
  for (std::size_t cls = 0; cls < g.num_classes; ++cls) {
    for (std::uint32_t u = 0; u < g.class_size[cls]; ++u) {
      for (std::uint32_t v = u + 1; v < g.class_size[cls]; ++v) {
        // Merging only adds paths, so set equality reduces to size equality.
        std::vector<Vec> merged =
            code_of(merge_vertices(g, cls, u, v), t.field(), cap);
        if (merged == base) {
          return MergeWitness{true, cls, t.label(cls, u), t.label(cls, v)};
        }
      }
    }
  }
  return MergeWitness{};
}

OutDegreeProfile out_degree_profile(const Trellis& t) {
  OutDegreeProfile p;
  for (std::size_t s = 0; s < t.depth(); ++s) {
    std::vector<int> deg(t.class_size(s), 0);
    for (const TrellisEdge& e : t.section(s)) ++deg[e.from];
    int d = deg.empty() ? 0 : deg.front();
    for (int x : deg) {
      if (x != d) {
        d = -1;
        break;
      }
    }
    p.degrees.push_back(d);
  }
  return p;
}

namespace {

// Per-vertex degree signature used to prune isomorphism candidates.
using VertexSig = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;

std::vector<std::vector<VertexSig>> vertex_signatures(const Trellis& t) {
  std::vector<std::vector<VertexSig>> sig(t.num_classes());
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    sig[c].resize(t.class_size(c));
  }
  for (std::size_t s = 0; s < t.depth(); ++s) {
    std::size_t target = t.section_target(s);
    for (const TrellisEdge& e : t.section(s)) {
      sig[s][e.from].first.push_back(e.symbol);
      sig[target][e.to].second.push_back(e.symbol);
    }
  }
  for (auto& cls : sig) {
    for (auto& v : cls) {
      std::sort(v.first.begin(), v.first.end());
      std::sort(v.second.begin(), v.second.end());
    }
  }
  return sig;
}

}  // namespace

bool isomorphic(const Trellis& a, const Trellis& b) {
  if (a.depth() != b.depth() || !(a.field() == b.field()) ||
      a.tail_biting() != b.tail_biting()) {
    return false;
  }
  const std::size_t nc = a.num_classes();
  for (std::size_t c = 0; c < nc; ++c) {
    if (a.class_size(c) != b.class_size(c)) return false;
  }
  for (std::size_t s = 0; s < a.depth(); ++s) {
    if (a.section(s).size() != b.section(s).size()) return false;
  }
  auto siga = vertex_signatures(a);
  auto sigb = vertex_signatures(b);

  // map[c][i] = image in b of vertex i of a's class c.
  std::vector<std::vector<std::uint32_t>> map(nc);

  // Checks that section s of a maps exactly onto section s of b under the
  // currently fixed class maps.
  auto section_ok = [&](std::size_t s) {
    std::size_t target = a.section_target(s);
    const auto& be = b.section(s);
    for (const TrellisEdge& e : a.section(s)) {
      TrellisEdge m{map[s][e.from], e.symbol, map[target][e.to]};
      if (!std::binary_search(be.begin(), be.end(), m)) return false;
    }
    return true;
  };

  // Extends the match class by class; within a class, vertex by vertex.
  std::function<bool(std::size_t)> match_class = [&](std::size_t c) -> bool {
    if (c == nc) {
      // All classes mapped; sections 0..depth-2 were checked on the way.
      return section_ok(a.depth() - 1);
    }
    std::vector<std::uint32_t>& m = map[c];
    std::vector<char> used(b.class_size(c), 0);
    m.assign(a.class_size(c), 0);
    std::function<bool(std::uint32_t)> place = [&](std::uint32_t i) -> bool {
      if (i == a.class_size(c)) {
        if (c > 0 && !section_ok(c - 1)) return false;
        return match_class(c + 1);
      }
      for (std::uint32_t j = 0; j < b.class_size(c); ++j) {
        if (used[j] || !(siga[c][i] == sigb[c][j])) continue;
        used[j] = 1;
        m[i] = j;
        if (place(i + 1)) return true;
        used[j] = 0;
      }
      return false;
    };
    return place(0);
  };
  return match_class(0);
}

Trellis rotate(const Trellis& t, std::size_t shift) {
  if (!t.tail_biting()) {
    throw precondition_error("rotate requires a tail-biting trellis");
  }
  const std::size_t n = t.depth();
  shift %= n;
  TrellisBuilder builder(t.field(), n, true, t.label_len());
  for (std::size_t c = 0; c < n; ++c) {
    for (const Vec& l : t.class_labels((c + shift) % n)) {
      builder.add_vertex(c, l);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t old_s = (s + shift) % n;
    std::size_t old_target = t.section_target(old_s);
    for (const TrellisEdge& e : t.section(old_s)) {
      builder.add_edge(s, t.label(old_s, e.from), e.symbol,
                       t.label(old_target, e.to));
    }
  }
  return std::move(builder).build();
}

}  // namespace tbt
