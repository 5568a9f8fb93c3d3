// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubkit/clique.hpp"

#include <algorithm>
#include <bit>

#include "mubkit/errors.hpp"

namespace mubkit {

Graph::Graph(std::size_t n) : n_(n), rows_(n, std::vector<std::uint64_t>((n + 63) / 64, 0)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InvalidArgument("graph: vertex out of range");
  if (u == v) return;
  rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v][u / 64] |= std::uint64_t{1} << (u % 64);
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
  }
  return SIZE_MAX;
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

class Solver {
 public:
  explicit Solver(const Graph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    Bits all((g_.size() + 63) / 64, 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(all, current);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Sequential greedy colouring of p; colours[i] bounds the clique size
  // within order[0..i].
  void colour(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
    Bits uncoloured = p;
    std::size_t k = 0;
    while (any(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      while (any(q)) {
        const std::size_t v = first(q);
        reset(q, v);
        reset(uncoloured, v);
        const auto& row = g_.row(v);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~row[w];
        order.push_back(v);
        colours.push_back(k);
      }
    }
  }

  void expand(Bits p, std::vector<std::size_t>& current) {
    std::vector<std::size_t> order, colours;
    colour(p, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next = p;
      const auto& row = g_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= row[w];
      if (any(next)) {
        expand(std::move(next), current);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      reset(p, v);
    }
  }

  const Graph& g_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> max_clique(const Graph& g) { return Solver(g).run(); }

}  // namespace mubkit
