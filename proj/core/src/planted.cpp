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

#include "ssr/planted.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

constexpr std::size_t kMaxRedraws = 1'000'000;

std::size_t community_size(const PlantedConfig& cfg, std::size_t c) {
  return cfg.n / cfg.communities + (c < cfg.n % cfg.communities ? 1 : 0);
}

}  // namespace

void PlantedConfig::validate() const {
  if (communities == 0 || n < communities) {
    throw GenerationError("need n >= communities >= 1");
  }
  if (n > std::size_t{0xFFFFFFFFu}) {
    throw GenerationError("n exceeds the 32-bit vertex range");
  }
  if (!(mixing >= 0.0 && mixing <= 1.0)) {
    throw GenerationError("mixing must lie in [0, 1]");
  }
  if (!(avg_degree > 0.0) || !std::isfinite(avg_degree)) {
    throw GenerationError("average degree must be positive");
  }
  if (static_cast<double>(max_degree) < avg_degree) {
    throw GenerationError("max degree must be at least the average degree");
  }
  const double smallest = static_cast<double>(n / communities);
  if ((1.0 - mixing) * avg_degree > smallest - 1.0) {
    throw GenerationError(
        "intra-community degree " + std::to_string((1.0 - mixing) * avg_degree) +
        " exceeds community size - 1 = " + std::to_string(smallest - 1.0));
  }
  if (mixing > 0.0 && communities < 2) {
    throw GenerationError("inter-community edges need at least two communities");
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  if (std::ceil(static_cast<double>(n) * avg_degree / 2.0) > pairs) {
    throw GenerationError("edge budget exceeds the number of vertex pairs");
  }
}

PlantedGraph generate_planted(const PlantedConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n;
  const std::size_t k = cfg.communities;

  std::vector<CommunityId> labels(n);
  std::vector<VertexId> first(k + 1, 0);
  for (std::size_t c = 0; c < k; ++c) {
    first[c + 1] = first[c] + static_cast<VertexId>(community_size(cfg, c));
    for (VertexId v = first[c]; v < first[c + 1]; ++v) {
      labels[v] = static_cast<CommunityId>(c);
    }
  }

  const auto budget = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * cfg.avg_degree / 2.0));
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution is_inter(cfg.mixing);
  std::uniform_int_distribution<std::size_t> pick_community(0, k - 1);
  std::uniform_int_distribution<VertexId> pick_vertex(
      0, static_cast<VertexId>(n - 1));

  std::unordered_set<std::uint64_t> present;
  present.reserve(budget * 2);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  edges.reserve(budget);
  std::size_t inter_edges = 0;
  std::size_t redraws = 0;

  for (std::size_t e = 0; e < budget; ++e) {
    const bool inter = is_inter(rng);
    for (;;) {
      VertexId u;
      VertexId v;
      if (inter) {
        u = pick_vertex(rng);
        do {
          v = pick_vertex(rng);
        } while (labels[v] == labels[u]);
      } else {
        const std::size_t c = pick_community(rng);
        std::uniform_int_distribution<VertexId> inside(first[c], first[c + 1] - 1);
        u = inside(rng);
        do {
          v = inside(rng);
        } while (v == u);
      }
      const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
      if (degree[u] < cfg.max_degree && degree[v] < cfg.max_degree &&
          present.insert(key).second) {
        ++degree[u];
        ++degree[v];
        edges.push_back({u, v, 1.0});
        if (inter) ++inter_edges;
        break;
      }
      if (++redraws > kMaxRedraws) {
        throw GenerationError("edge sampling stalled after " +
                              std::to_string(kMaxRedraws) + " redraws");
      }
    }
  }

  PlantedGraph out;
  out.graph = Graph::from_edges(n, /*directed=*/false, edges);
  out.truth = make_scored_partition(out.graph, labels);
  out.realized_mixing =
      budget == 0 ? 0.0 : static_cast<double>(inter_edges) / static_cast<double>(budget);
  return out;
}

}  // namespace ssr
