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

#include "ssr/partition.hpp"

#include <unordered_map>

namespace ssr {

Partition make_partition(std::span<const CommunityId> labels) {
  Partition p;
  p.labels.resize(labels.size());
  std::unordered_map<CommunityId, CommunityId> canon;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] =
        canon.try_emplace(labels[v], static_cast<CommunityId>(canon.size()));
    if (inserted) p.communities.emplace_back();
    p.labels[v] = it->second;
    p.communities[it->second].push_back(static_cast<VertexId>(v));
  }
  return p;
}

Partition make_scored_partition(const Graph& g,
                                std::span<const CommunityId> labels) {
  Partition p = make_partition(labels);
  p.q = modularity(g, p.labels).q;
  return p;
}

}  // namespace ssr
