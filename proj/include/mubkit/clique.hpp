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

// Exact maximum clique by branch and bound with a greedy-colouring bound.

#ifndef MUBKIT_CLIQUE_HPP_
#define MUBKIT_CLIQUE_HPP_

#include <cstdint>
#include <vector>

namespace mubkit {

class Graph {
 public:
  explicit Graph(std::size_t n);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u][v / 64] >> (v % 64)) & 1u; }
  const std::vector<std::uint64_t>& row(std::size_t u) const { return rows_[u]; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Vertices of one maximum clique, ascending. Empty for the empty graph.
std::vector<std::size_t> max_clique(const Graph& g);

}  // namespace mubkit

#endif  // MUBKIT_CLIQUE_HPP_
