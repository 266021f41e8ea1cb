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

#include "ssr/partitioner.hpp"

#include <chrono>
#include <memory>
#include <optional>
#include <queue>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

struct PendingGroup {
  ModularityOperator op;

  std::size_t size() const { return op.size(); }
  VertexId first() const { return op.global_ids().front(); }
};

struct LargestFirst {
  bool operator()(const PendingGroup& a, const PendingGroup& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.first() > b.first();
  }
};

std::vector<std::int8_t> bisect(const ModularityOperator& op,
                                const SsrConfig& cfg, Method method) {
  if (method == Method::kSpectral) return conventional_bisect(op, cfg);
  try {
    return ssr_bipartition(op, cfg).signs;
  } catch (const NullOperatorError&) {
    return std::vector<std::int8_t>(op.size(), 1);
  }
}

}  // namespace

std::vector<std::int8_t> conventional_bisect(const ModularityOperator& scope,
                                             const SsrConfig& cfg) {
  cfg.validate();
  if (scope.size() < 2) {
    throw ValidationError("bipartition needs at least two vertices");
  }
  try {
    const std::vector<double> start = field_start(scope, cfg);
    return sign_round(leading_eigenvector(scope, cfg.power(), start).vector);
  } catch (const NullOperatorError&) {
    return std::vector<std::int8_t>(scope.size(), 1);
  }
}

DetectReport detect(const Graph& g, const SsrConfig& cfg, Method method,
                    ThreadPool* pool) {
  cfg.validate();
  if (g.num_vertices() == 0) throw ValidationError("graph is empty");
  const auto t0 = std::chrono::steady_clock::now();

  std::optional<ThreadPool> own_pool;
  if (pool == nullptr && cfg.threads != 1) {
    own_pool.emplace(cfg.threads);
    pool = &*own_pool;
  }

  KernelOptions kernel;
  kernel.pool = pool;
  kernel.chunk_rows = cfg.chunk_rows;
  kernel.counter = std::make_shared<WorkCounter>();

  DetectReport report;
  std::priority_queue<PendingGroup, std::vector<PendingGroup>, LargestFirst> queue;
  queue.push({ModularityOperator::whole_graph(g, kernel)});
  std::vector<CommunityId> labels(g.num_vertices(), 0);
  CommunityId next_label = 0;

  auto finalize = [&](const ModularityOperator& op) {
    for (VertexId v : op.global_ids()) labels[v] = next_label;
    ++next_label;
  };

  while (!queue.empty()) {
    PendingGroup group = queue.top();
    queue.pop();
    if (group.size() < 2) {
      finalize(group.op);
      continue;
    }

    const std::vector<std::int8_t> signs = bisect(group.op, cfg, method);
    ++report.bisection_count;

    std::vector<std::uint32_t> plus;
    std::vector<std::uint32_t> minus;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      (signs[i] > 0 ? plus : minus).push_back(static_cast<std::uint32_t>(i));
    }
    if (plus.empty() || minus.empty()) {
      finalize(group.op);
      continue;
    }
    const double gain = bisection_delta_q(group.op, signs);
    if (!(gain > kGainTolerance)) {
      finalize(group.op);
      continue;
    }
    report.accepted_gains.push_back(gain);
    queue.push({group.op.subscope(plus)});
    queue.push({group.op.subscope(minus)});
  }

  report.partition = make_scored_partition(g, labels);
  report.matvecs = kernel.counter->matvecs.load();
  report.work = kernel.counter->work.load();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace ssr
