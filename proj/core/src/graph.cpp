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

#include "ssr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<VertexId> cols;
  std::vector<double> weights;
};

// Bucket entries by row, sort each row by column and merge repeats.
Csr build_csr(std::size_t n, std::span<const VertexId> rows,
              std::span<const VertexId> cols, std::span<const double> weights) {
  std::vector<std::size_t> counts(n + 1, 0);
  for (VertexId r : rows) ++counts[r + 1];
  std::partial_sum(counts.begin(), counts.end(), counts.begin());

  std::vector<std::pair<VertexId, double>> slots(rows.size());
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (std::size_t e = 0; e < rows.size(); ++e) {
    slots[cursor[rows[e]]++] = {cols[e], weights[e]};
  }

  Csr out;
  out.offsets.assign(n + 1, 0);
  out.cols.reserve(slots.size());
  out.weights.reserve(slots.size());
  for (std::size_t r = 0; r < n; ++r) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(counts[r]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(counts[r + 1]);
    std::sort(first, last, [](const auto& a, const auto& b) {
      return a.first < b.first;
    });
    for (auto it = first; it != last; ++it) {
      if (!out.cols.empty() && out.cols.size() > out.offsets[r] &&
          out.cols.back() == it->first) {
        out.weights.back() += it->second;
      } else {
        out.cols.push_back(it->first);
        out.weights.push_back(it->second);
      }
    }
    out.offsets[r + 1] = out.cols.size();
  }
  return out;
}

std::vector<VertexId> rows_of(const std::vector<std::size_t>& offsets,
                              std::size_t entries) {
  std::vector<VertexId> rows(entries);
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    std::fill(rows.begin() + static_cast<std::ptrdiff_t>(offsets[r]),
              rows.begin() + static_cast<std::ptrdiff_t>(offsets[r + 1]),
              static_cast<VertexId>(r));
  }
  return rows;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, bool directed,
                        std::span<const Edge> edges,
                        std::vector<std::string> tokens, bool weighted) {
  if (n == 0) throw ValidationError("graph has no vertices");
  if (n > std::size_t{0xFFFFFFFFu}) {
    throw ValidationError("vertex count exceeds 32-bit index range");
  }
  if (!tokens.empty() && tokens.size() != n) {
    throw ValidationError("token table size " + std::to_string(tokens.size()) +
                          " does not match vertex count " + std::to_string(n));
  }

  const std::size_t copies = directed ? 1 : 2;
  std::vector<VertexId> rows;
  std::vector<VertexId> cols;
  std::vector<double> ws;
  rows.reserve(edges.size() * copies);
  cols.reserve(edges.size() * copies);
  ws.reserve(edges.size() * copies);
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw ValidationError("edge endpoint out of range: " +
                            std::to_string(e.src) + " -> " +
                            std::to_string(e.dst));
    }
    if (e.src == e.dst) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.src));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw ValidationError("edge weight must be finite and non-negative");
    }
    rows.push_back(e.src);
    cols.push_back(e.dst);
    ws.push_back(e.weight);
    if (!directed) {
      rows.push_back(e.dst);
      cols.push_back(e.src);
      ws.push_back(e.weight);
    }
  }

  Graph g;
  g.directed_ = directed;
  g.weighted_ = weighted;
  Csr out = build_csr(n, rows, cols, ws);
  g.offsets_ = std::move(out.offsets);
  g.cols_ = std::move(out.cols);
  g.weights_ = std::move(out.weights);
  g.num_edges_ = directed ? g.cols_.size() : g.cols_.size() / 2;

  g.out_degree_.assign(n, 0.0);
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double d = 0.0;
    for (std::size_t e = g.offsets_[v]; e < g.offsets_[v + 1]; ++e) {
      d += g.weights_[e];
    }
    g.out_degree_[v] = d;
    total += d;
  }
  g.total_weight_ = directed ? total : 0.5 * total;

  if (directed) {
    Csr in = build_csr(n, g.cols_, rows_of(g.offsets_, g.cols_.size()),
                       g.weights_);
    g.in_offsets_ = std::move(in.offsets);
    g.in_cols_ = std::move(in.cols);
    g.in_weights_ = std::move(in.weights);
    g.in_degree_.assign(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      double d = 0.0;
      for (std::size_t e = g.in_offsets_[v]; e < g.in_offsets_[v + 1]; ++e) {
        d += g.in_weights_[e];
      }
      g.in_degree_[v] = d;
    }
  }

  if (tokens.empty()) {
    tokens.reserve(n);
    for (std::size_t v = 0; v < n; ++v) tokens.push_back(std::to_string(v));
  }
  g.tokens_ = std::move(tokens);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId v = 0; v < num_vertices(); ++v) {
    auto nb = neighbors(v);
    auto w = weights(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (directed_ || v < nb[k]) out.push_back({v, nb[k], w[k]});
    }
  }
  return out;
}

VertexSubset VertexSubset::from_ids(std::vector<VertexId> ids, std::size_t n) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] >= n) {
      throw ValidationError("subset vertex " + std::to_string(ids[k]) +
                            " out of range");
    }
    if (k > 0 && ids[k] == ids[k - 1]) {
      throw ValidationError("subset vertex " + std::to_string(ids[k]) +
                            " listed twice");
    }
  }
  VertexSubset s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSubset VertexSubset::all(std::size_t n) {
  VertexSubset s;
  s.ids_.resize(n);
  std::iota(s.ids_.begin(), s.ids_.end(), VertexId{0});
  return s;
}

Graph induced_subgraph(const Graph& g, const VertexSubset& subset) {
  constexpr VertexId kAbsent = 0xFFFFFFFFu;
  std::vector<VertexId> local(g.num_vertices(), kAbsent);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= g.num_vertices()) {
      throw ValidationError("subset vertex out of range");
    }
    if (local[subset[k]] != kAbsent) {
      throw ValidationError("subset vertex listed twice");
    }
    local[subset[k]] = static_cast<VertexId>(k);
  }

  std::vector<Edge> edges;
  std::vector<std::string> tokens;
  tokens.reserve(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const VertexId v = subset[k];
    tokens.push_back(g.token(v));
    auto nb = g.neighbors(v);
    auto w = g.weights(v);
    for (std::size_t e = 0; e < nb.size(); ++e) {
      const VertexId u = local[nb[e]];
      if (u == kAbsent) continue;
      if (g.directed() || k < u) {
        edges.push_back({static_cast<VertexId>(k), u, w[e]});
      }
    }
  }
  return Graph::from_edges(subset.size(), g.directed(), edges,
                           std::move(tokens), g.weighted());
}

}  // namespace ssr
