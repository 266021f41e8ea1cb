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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/linear_operator.hpp"
#include "ssr/parallel.hpp"

namespace ssr {

using CommunityId = std::uint32_t;

/// Matvec tally shared by every operator derived from the same root.
struct WorkCounter {
  std::atomic<std::uint64_t> matvecs{0};
  /// Rows plus stored entries touched, summed over applications.
  std::atomic<std::uint64_t> work{0};
};

struct KernelOptions {
  ThreadPool* pool = nullptr;
  std::size_t chunk_rows = 4096;
  std::shared_ptr<WorkCounter> counter;
};

enum class OperatorMode { kUndirected, kDirectedSymmetrized };

/// Implicit modularity matrix restricted to a vertex scope.
///
/// With A the adjacency, o/n the out/in degrees and W the adjacency sum
/// (2m undirected, m directed), the operator applies
///
///   Op x = ½(A + Aᵀ)x − (o·(nᵀx) + n·(oᵀx)) / 2W − diag∘x + shift·x
///
/// over the scope rows, which reduces to Ax − d(dᵀx)/2m − diag∘x + shift·x for
/// undirected graphs. Degrees and W are always those of the full graph. For a
/// group scope, diag holds the row sums of the unrestricted matrix over the
/// group, so the operator is the generalized modularity matrix of that group
/// and sᵀ·Op·s / 2W is the modularity gain of splitting it along s. A
/// principal block (see restrict_to) keeps its parent's diag.
class ModularityOperator final : public LinearOperator {
 public:
  static ModularityOperator whole_graph(const Graph& g, KernelOptions opts = {});
  static ModularityOperator scoped(const Graph& g, const VertexSubset& scope,
                                   KernelOptions opts = {});

  /// Group operator for the subset `local_rows` of this scope (ascending
  /// local indices), with the group diag recomputed.
  ModularityOperator subscope(std::span<const std::uint32_t> local_rows) const;
  /// Principal sub-block on `local_rows`; entries are copied, not re-derived.
  ModularityOperator restrict_to(std::span<const std::uint32_t> local_rows) const;
  ModularityOperator with_shift(double shift) const;

  std::size_t size() const override;
  void apply(std::span<const double> x, std::span<double> y) const override;
  std::vector<double> apply(std::span<const double> x) const;
  std::uint64_t row_key(std::size_t i) const override;
  bool ones_in_null_space() const override;

  /// y[i] += Σ_{j ∈ cols} Op[i][j]·values[j] for every row i outside `cols`.
  /// Rows inside `cols` receive unspecified values.
  void accumulate_columns(std::span<const std::uint32_t> cols,
                          std::span<const double> values,
                          std::span<double> y) const;

  OperatorMode mode() const noexcept;
  double shift() const noexcept { return shift_; }
  double adjacency_sum() const noexcept;
  std::size_t num_entries() const noexcept;
  std::span<const VertexId> global_ids() const noexcept;
  std::span<const double> diagonal_correction() const noexcept;
  const KernelOptions& kernel() const noexcept;

 private:
  struct Block;

  explicit ModularityOperator(std::shared_ptr<const Block> block)
      : block_(std::move(block)) {}

  ModularityOperator derive(std::span<const std::uint32_t> local_rows,
                            bool principal) const;

  std::shared_ptr<const Block> block_;
  double shift_ = 0.0;
};

struct PartitionScore {
  double q = 0.0;
  std::vector<double> per_community;
};

/// Exact modularity of a labelling in O(n + m). Labels are arbitrary
/// non-negative ids; per_community is indexed by label value.
PartitionScore modularity(const Graph& g, std::span<const CommunityId> labels);

/// Modularity change of splitting the operator's scope along the signs of
/// `s`. Entries must be exactly ±1. The operator's shift is discounted.
double bisection_delta_q(const ModularityOperator& op, std::span<const double> s);
double bisection_delta_q(const ModularityOperator& op,
                         std::span<const std::int8_t> s);

}  // namespace ssr
