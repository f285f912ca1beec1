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

#include "tbt/decode.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tbt {
namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Best (distance, lexicographically smallest symbol suffix) from a vertex
// of one layer to the accepting vertex of the final layer.
struct Tail {
  std::size_t dist = kInf;
  std::string suffix;  // symbols as digit chars, for cheap lex comparison

  bool better_than(const Tail& o) const {
    if (dist != o.dist) return dist < o.dist;
    return suffix < o.suffix;
  }
};

}  // namespace

DecodeResult decode(const Trellis& t, const Vec& received) {
  if (received.size() != t.depth()) {
    throw precondition_error("received word length must equal the depth");
  }
  if (!(received.field() == t.field())) {
    throw precondition_error("received word field mismatch");
  }
  const std::size_t n = t.depth();

  // DP per start vertex: layer l in 0..n where layer n folds back onto the
  // start (tail-biting) or is the goal class (conventional).
  auto run = [&](std::uint32_t start) -> Tail {
    std::vector<std::vector<Tail>> best(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
      std::size_t cls = t.tail_biting() ? l % n : l;
      best[l].assign(t.class_size(cls), Tail{});
    }
    std::uint32_t accept = t.tail_biting() ? start : 0;
    best[n][accept] = Tail{0, ""};
    for (std::size_t l = n; l-- > 0;) {
      for (const TrellisEdge& e : t.section(l)) {
        const Tail& next = best[l + 1][e.to];
        if (next.dist == kInf) continue;
        std::size_t cost = e.symbol == received[l] ? 0 : 1;
        Tail cand{next.dist + cost,
                  std::string(1, static_cast<char>('0' + e.symbol)) +
                      next.suffix};
        if (cand.better_than(best[l][e.from])) best[l][e.from] = cand;
      }
    }
    return best[0][start];
  };

  Tail winner;
  if (t.tail_biting()) {
    for (std::uint32_t v = 0; v < t.class_size(0); ++v) {
      Tail cand = run(v);
      if (cand.better_than(winner)) winner = cand;
    }
  } else {
    winner = run(0);
  }
  if (winner.dist == kInf) {
    throw precondition_error("trellis has no full cycle to decode on");
  }
  return DecodeResult{Vec::from_digits(t.field(), winner.suffix), winner.dist};
}

}  // namespace tbt
