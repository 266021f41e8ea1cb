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

#include <span>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/modularity.hpp"

namespace ssr {

/// Community assignment. Ids are dense and numbered by the first vertex (in
/// index order) of each community.
struct Partition {
  std::vector<CommunityId> labels;
  std::vector<std::vector<VertexId>> communities;
  double q = 0.0;

  std::size_t num_communities() const noexcept { return communities.size(); }
};

/// Canonicalises arbitrary labels into a Partition; q is left at 0.
Partition make_partition(std::span<const CommunityId> labels);

/// make_partition followed by scoring against `g`.
Partition make_scored_partition(const Graph& g,
                                std::span<const CommunityId> labels);

}  // namespace ssr
