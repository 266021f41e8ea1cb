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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ssr {

using VertexId = std::uint32_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  double weight = 1.0;
};

/// Immutable sparse graph in compressed-row form.
///
/// Undirected graphs store every edge in both rows. Directed graphs store
/// arcs by source row and keep a transposed copy so in-neighbours can be
/// scanned in O(in-degree). Neighbour lists are sorted and duplicate-free.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Self-loops and negative or non-finite
  /// weights throw ValidationError; repeated edges have their weights summed.
  /// `tokens` names each vertex for output; defaults to "0".."n-1".
  static Graph from_edges(std::size_t n, bool directed,
                          std::span<const Edge> edges,
                          std::vector<std::string> tokens = {},
                          bool weighted = false);

  std::size_t num_vertices() const noexcept { return out_degree_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }

  /// Distinct edges (undirected pairs or directed arcs).
  std::size_t num_edges() const noexcept { return num_edges_; }
  /// Stored adjacency entries; twice num_edges() when undirected.
  std::size_t num_entries() const noexcept { return cols_.size(); }

  /// m: half the total degree when undirected, the total arc weight when
  /// directed.
  double total_weight() const noexcept { return total_weight_; }
  /// Sum of all stored adjacency weights (2m undirected, m directed). This is
  /// the normaliser that appears in every null-model term.
  double adjacency_sum() const noexcept {
    return directed_ ? total_weight_ : 2.0 * total_weight_;
  }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {cols_.data() + offsets_[v], cols_.data() + offsets_[v + 1]};
  }
  std::span<const double> weights(VertexId v) const noexcept {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const noexcept {
    if (!directed_) return neighbors(v);
    return {in_cols_.data() + in_offsets_[v],
            in_cols_.data() + in_offsets_[v + 1]};
  }
  std::span<const double> in_weights(VertexId v) const noexcept {
    if (!directed_) return weights(v);
    return {in_weights_.data() + in_offsets_[v],
            in_weights_.data() + in_offsets_[v + 1]};
  }

  std::span<const double> out_degree() const noexcept { return out_degree_; }
  std::span<const double> in_degree() const noexcept {
    return directed_ ? std::span<const double>(in_degree_)
                     : std::span<const double>(out_degree_);
  }

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& token(VertexId v) const { return tokens_.at(v); }

  /// Edges in canonical order: (src, dst) ascending, with src < dst when
  /// undirected.
  std::vector<Edge> edges() const;

 private:
  bool directed_ = false;
  bool weighted_ = false;
  std::size_t num_edges_ = 0;
  double total_weight_ = 0.0;

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> cols_;
  std::vector<double> weights_;

  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_cols_;
  std::vector<double> in_weights_;

  std::vector<double> out_degree_;
  std::vector<double> in_degree_;
  std::vector<std::string> tokens_;
};

/// Ordered set of global vertex ids; local index k refers to ids()[k].
class VertexSubset {
 public:
  VertexSubset() = default;

  /// Sorts `ids` and validates them against a graph of `n` vertices.
  /// Out-of-range or repeated ids throw ValidationError.
  static VertexSubset from_ids(std::vector<VertexId> ids, std::size_t n);
  static VertexSubset all(std::size_t n);

  std::span<const VertexId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  VertexId operator[](std::size_t k) const noexcept { return ids_[k]; }

 private:
  std::vector<VertexId> ids_;
};

/// Graph on `subset` keeping exactly the edges with both endpoints inside.
/// Vertex k of the result is subset[k]; tokens carry over.
Graph induced_subgraph(const Graph& g, const VertexSubset& subset);

}  // namespace ssr
