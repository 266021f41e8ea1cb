// Copyright 2026 The ssr Authors.
//
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

#include <filesystem>
#include <string>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/graph_io.hpp"

namespace ssr_test {

inline std::filesystem::path data_dir() { return SSR_TEST_DATA_DIR; }

inline ssr::Graph karate() {
  return ssr::load_gml(data_dir() / "karate.gml", false);
}

inline ssr::Graph lesmis(bool weighted = false) {
  return ssr::load_gml(data_dir() / "lesmis.gml", weighted);
}

inline ssr::Graph from_pairs(std::size_t n,
                             std::initializer_list<std::pair<int, int>> pairs,
                             bool directed = false) {
  std::vector<ssr::Edge> edges;
  for (auto [a, b] : pairs) {
    edges.push_back({static_cast<ssr::VertexId>(a), static_cast<ssr::VertexId>(b), 1.0});
  }
  return ssr::Graph::from_edges(n, directed, edges);
}

inline ssr::Graph triangle() { return from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Two triangles {0,1,2} and {3,4,5} joined by the edge 2–3.
inline ssr::Graph bridged_triangles() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

inline ssr::Graph disjoint_triangles() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

inline ssr::Graph complete(std::size_t n) {
  std::vector<ssr::Edge> edges;
  for (ssr::VertexId i = 0; i < n; ++i) {
    for (ssr::VertexId j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  }
  return ssr::Graph::from_edges(n, false, edges);
}

inline ssr::Graph path(std::size_t n) {
  std::vector<ssr::Edge> edges;
  for (ssr::VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return ssr::Graph::from_edges(n, false, edges);
}

}  // namespace ssr_test
