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

#include "ssr/graph.hpp"
#include "ssr/partition.hpp"

namespace ssr {

/// Planted-partition benchmark: k balanced communities, a fixed edge budget of
/// ⌈n·avg_degree/2⌉ and a mixing fraction of inter-community edges.
struct PlantedConfig {
  std::size_t n = 1000;
  std::size_t communities = 40;
  double avg_degree = 10.0;
  std::size_t max_degree = 25;
  double mixing = 0.1;
  std::uint64_t seed = 42;

  /// Throws GenerationError for infeasible settings.
  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  Partition truth;
  /// Inter-community edges over all edges.
  double realized_mixing = 0.0;
};

/// Community c holds a contiguous id range; the first n mod k communities get
/// one extra vertex. Each edge is intra-community with probability
/// 1 - mixing (both endpoints uniform in a uniformly chosen community), else
/// its endpoints are uniform over pairs in different communities. Endpoints
/// that would repeat an edge or exceed max_degree are redrawn, keeping the
/// edge's type; more than 10^6 redraws throws GenerationError.
PlantedGraph generate_planted(const PlantedConfig& cfg);

}  // namespace ssr
