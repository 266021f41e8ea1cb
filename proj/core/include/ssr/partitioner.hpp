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

#include <cstdint>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/modularity.hpp"
#include "ssr/parallel.hpp"
#include "ssr/partition.hpp"
#include "ssr/relaxation.hpp"

namespace ssr {

enum class Method { kSsr, kSpectral };

/// A split is accepted only when its modularity gain exceeds this.
inline constexpr double kGainTolerance = 1e-10;

struct DetectReport {
  Partition partition;
  /// Bisections attempted, accepted or not.
  std::size_t bisection_count = 0;
  /// Gain of each accepted split, in acceptance order. Sums to partition.q.
  std::vector<double> accepted_gains;
  double wall_seconds = 0.0;
  std::uint64_t matvecs = 0;
  std::uint64_t work = 0;
};

/// Sign rounding of the leading eigenvector of the scope operator. Scopes on
/// which the operator vanishes come back unsplit (all +1).
std::vector<std::int8_t> conventional_bisect(const ModularityOperator& scope,
                                             const SsrConfig& cfg);

/// Recursive two-way division. Groups are taken largest first; each is split
/// with the chosen method on its generalized modularity operator and the split
/// is kept only if it raises modularity. Kernels run on `pool` when given,
/// otherwise on a pool of cfg.threads threads.
DetectReport detect(const Graph& g, const SsrConfig& cfg,
                    Method method = Method::kSsr, ThreadPool* pool = nullptr);

}  // namespace ssr
