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

namespace ssr {

struct PowerConfig {
  double tol = 1e-7;
  /// 0 selects 10·n + 1000.
  std::size_t max_iter = 0;
  std::uint64_t seed = 42;
  /// Keep the Rayleigh quotient of every iterate in EigenEstimate::trace.
  bool record_trace = false;

  void validate() const;
  std::size_t iteration_cap(std::size_t n) const {
    return max_iter != 0 ? max_iter : 10 * n + 1000;
  }
};

struct EigenEstimate {
  std::vector<double> vector;  // unit norm
  double rayleigh = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Diagonal shift the estimate was computed under; rayleigh excludes it.
  double shift = 0.0;
  std::vector<double> trace;
};

/// x ↦ base·x + shift·x without copying the base operator.
class ShiftedOperator final : public LinearOperator {
 public:
  ShiftedOperator(const LinearOperator& base, double shift)
      : base_(base), shift_(shift) {}

  std::size_t size() const override { return base_.size(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  std::uint64_t row_key(std::size_t i) const override { return base_.row_key(i); }
  bool ones_in_null_space() const override { return base_.ones_in_null_space(); }

 private:
  const LinearOperator& base_;
  double shift_;
};

/// Uniform [-1, 1] entries keyed on (seed, row_key, attempt), projected off
/// the all-ones vector when the operator annihilates it.
std::vector<double> seeded_start(const LinearOperator& op, std::uint64_t seed,
                                 std::uint64_t attempt = 0);

/// Power iteration v ← Op·v / ‖Op·v‖ until the iterate (up to sign) moves
/// less than cfg.tol. A null product restarts from a fresh seeded draw, at
/// most three times, then throws NullOperatorError. An explicit `start`
/// replaces the first seeded draw.
EigenEstimate power_iterate(const LinearOperator& op, const PowerConfig& cfg,
                            std::span<const double> start = {});

/// Relative margin applied on top of |λ| when shifting.
inline constexpr double kShiftMargin = 1e-3;

/// Estimate of the most positive eigenpair. If the dominant eigenvalue is
/// negative, iteration is repeated on Op + |λ|(1 + margin)·I; the reported
/// rayleigh always refers to the unshifted operator.
EigenEstimate leading_eigenvector(const LinearOperator& op,
                                  const PowerConfig& cfg,
                                  std::span<const double> start = {});

/// +1 for non-negative entries, -1 for negative ones.
std::vector<std::int8_t> sign_round(std::span<const double> v);

}  // namespace ssr
