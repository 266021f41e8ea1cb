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
#include <vector>

#include "ssr/linear_operator.hpp"
#include "ssr/modularity.hpp"
#include "ssr/spectral.hpp"

namespace ssr {

struct SsrConfig {
  /// Rounding threshold on the relaxed vector, which is kept at RMS entry
  /// magnitude 1.
  double sigma = 1.0;
  /// Minimum fraction of free vertices fixed per outer round.
  double epsilon_min = 0.25;
  double inner_tol = 1e-7;
  /// 0 selects 10·k + 1000 for k free vertices.
  std::size_t inner_max_iter = 0;
  double power_tol = 1e-7;
  /// 0 selects 10·n + 1000.
  std::size_t power_max_iter = 0;
  std::uint64_t seed = 42;
  /// Kernel threads; 0 selects hardware concurrency.
  std::size_t threads = 0;
  std::size_t chunk_rows = 4096;
  /// Optional per-vertex start values (indexed by global vertex id) used in
  /// place of the seeded draw for the first power iteration of every scope.
  std::vector<double> start_field;

  void validate() const;
  PowerConfig power() const;
};

/// Partition-in-progress of one scope.
struct RoundingState {
  /// Per scope vertex: 0 while free, otherwise the fixed sign.
  std::vector<std::int8_t> fixed;
  /// Free scope-local vertices, ascending.
  std::vector<std::uint32_t> free;
  /// Relaxed values over `free`, kept at norm √|free|.
  std::vector<double> relaxed;

  /// All vertices free; `v` is rescaled to norm √n (left as is when zero).
  static RoundingState from_relaxed(std::span<const double> v);
  std::size_t num_free() const noexcept { return free.size(); }
};

/// B₋₊·s₊ over the free vertices.
struct CouplingVector {
  std::vector<double> values;
};

/// Full recomputation of the coupling from the scope operator.
CouplingVector compute_coupling(const ModularityOperator& scope,
                                const RoundingState& state);

/// Objective s₋ᵀ·Op·s₋ + 2·s₋ᵀ·b over the free block.
double residual_objective(const LinearOperator& free_block,
                          std::span<const double> relaxed,
                          std::span<const double> coupling);

/// Fixes every free vertex with |relaxed| ≥ sigma, or the ⌈epsilon_min·k⌉
/// largest magnitudes when fewer qualify (lower index wins ties, zero fixes
/// to +1). The coupling is updated incrementally from the new columns and the
/// remaining relaxed entries are rescaled to norm √k'. Returns the number of
/// vertices fixed.
std::size_t partial_round(RoundingState& state, CouplingVector& coupling,
                          const ModularityOperator& scope,
                          const SsrConfig& cfg);

/// One constrained power update √k·(Op·s + b)/‖Op·s + b‖. A zero numerator is
/// retried once after a seeded 1e-8·√k perturbation; a second zero throws
/// NumericalError.
std::vector<double> cpm_step(const LinearOperator& free_block,
                             std::span<const double> relaxed,
                             std::span<const double> coupling,
                             std::uint64_t seed = 0);

struct CpmResult {
  std::vector<double> relaxed;
  std::size_t iterations = 0;
  bool converged = false;
  /// Objective at every iterate, starting with the input, when requested.
  std::vector<double> objective_trace;
};

/// Iterates cpm_step until the relative change drops below cfg.inner_tol or
/// the cap is hit. An update that stays zero after the perturbation retry ends
/// the solve at the current iterate, flagged as converged. `free_block` should already carry its positive-definite
/// shift.
CpmResult cpm_solve(const LinearOperator& free_block,
                    std::span<const double> relaxed,
                    std::span<const double> coupling, const SsrConfig& cfg,
                    bool record_objective = false);

/// Diagonal shift for a free block: |λ|·(1 + margin) when a short power run
/// finds a non-positive dominant eigenvalue λ, otherwise 0.
double positive_definite_shift(const LinearOperator& free_block,
                               const SsrConfig& cfg);

struct BisectionResult {
  std::vector<std::int8_t> signs;
  std::size_t outer_iterations = 0;
  std::size_t inner_iterations = 0;
  /// Σ over CPM iterations of the free-set size.
  std::uint64_t inner_work = 0;
  bool inner_converged = true;
  EigenEstimate initial;
};

/// Successive spectral bipartition of a scope (size ≥ 2).
BisectionResult ssr_bipartition(const ModularityOperator& scope,
                                const SsrConfig& cfg);

/// Start vector for `op` taken from cfg.start_field, or empty for the seeded
/// draw.
std::vector<double> field_start(const LinearOperator& op, const SsrConfig& cfg);

}  // namespace ssr
