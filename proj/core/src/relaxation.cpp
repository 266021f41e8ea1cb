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

#include "ssr/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void rescale_to(std::vector<double>& v, double target) {
  const double nv = norm2(v);
  if (nv > 0.0) {
    const double f = target / nv;
    for (double& x : v) x *= f;
  }
}

// Power-run budget for estimating a free block's dominant eigenvalue.
constexpr std::size_t kShiftProbeIterations = 100;
constexpr double kShiftProbeTol = 1e-3;

}  // namespace

void SsrConfig::validate() const {
  if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
  if (!(epsilon_min > 0.0 && epsilon_min < 1.0)) {
    throw ValidationError("epsilon must lie strictly between 0 and 1");
  }
  if (!(inner_tol > 0.0)) throw ValidationError("inner tolerance must be positive");
  if (!(power_tol > 0.0)) throw ValidationError("power tolerance must be positive");
  if (chunk_rows == 0) throw ValidationError("chunk size must be positive");
}

PowerConfig SsrConfig::power() const {
  PowerConfig p;
  p.tol = power_tol;
  p.max_iter = power_max_iter;
  p.seed = seed;
  return p;
}

std::vector<double> field_start(const LinearOperator& op, const SsrConfig& cfg) {
  if (cfg.start_field.empty()) return {};
  const std::size_t n = op.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t key = op.row_key(i);
    if (key >= cfg.start_field.size()) {
      throw ValidationError("start field does not cover vertex " +
                            std::to_string(key));
    }
    v[i] = cfg.start_field[key];
  }
  if (op.ones_in_null_space() && n > 1) {
    const double mean =
        std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    for (double& x : v) x -= mean;
  }
  return v;
}

RoundingState RoundingState::from_relaxed(std::span<const double> v) {
  RoundingState s;
  s.fixed.assign(v.size(), 0);
  s.free.resize(v.size());
  std::iota(s.free.begin(), s.free.end(), std::uint32_t{0});
  s.relaxed.assign(v.begin(), v.end());
  rescale_to(s.relaxed, std::sqrt(static_cast<double>(v.size())));
  return s;
}

CouplingVector compute_coupling(const ModularityOperator& scope,
                                const RoundingState& state) {
  if (state.fixed.size() != scope.size()) {
    throw ValidationError("rounding state does not match scope size");
  }
  std::vector<double> x(scope.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = state.fixed[i];
  // Free entries of x are zero, so neither the diagonal nor any shift leaks in.
  const std::vector<double> y = scope.with_shift(0.0).apply(x);
  CouplingVector c;
  c.values.resize(state.free.size());
  for (std::size_t k = 0; k < state.free.size(); ++k) {
    c.values[k] = y[state.free[k]];
  }
  return c;
}

double residual_objective(const LinearOperator& free_block,
                          std::span<const double> relaxed,
                          std::span<const double> coupling) {
  std::vector<double> y(relaxed.size());
  free_block.apply(relaxed, y);
  double quad = 0.0;
  double lin = 0.0;
  for (std::size_t i = 0; i < relaxed.size(); ++i) {
    quad += relaxed[i] * y[i];
    lin += relaxed[i] * coupling[i];
  }
  return quad + 2.0 * lin;
}

std::size_t partial_round(RoundingState& state, CouplingVector& coupling,
                          const ModularityOperator& scope,
                          const SsrConfig& cfg) {
  const std::size_t k = state.free.size();
  if (k == 0) return 0;
  if (state.relaxed.size() != k || coupling.values.size() != k) {
    throw ValidationError("rounding state and coupling are out of sync");
  }

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::abs(state.relaxed[i]) >= cfg.sigma) chosen.push_back(i);
  }
  const auto floor_count = static_cast<std::size_t>(
      std::ceil(cfg.epsilon_min * static_cast<double>(k)));
  const std::size_t minimum = std::clamp<std::size_t>(floor_count, 1, k);
  if (chosen.size() < minimum) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Positions ascend with vertex index, so the index tie-break is positional.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(state.relaxed[a]) > std::abs(state.relaxed[b]);
    });
    order.resize(minimum);
    std::sort(order.begin(), order.end());
    chosen = std::move(order);
  }

  std::vector<std::uint32_t> new_cols;
  std::vector<double> new_signs;
  new_cols.reserve(chosen.size());
  new_signs.reserve(chosen.size());
  std::vector<char> taken(k, 0);
  for (std::size_t pos : chosen) {
    const std::int8_t sign = state.relaxed[pos] < 0.0 ? -1 : 1;
    const std::uint32_t v = state.free[pos];
    state.fixed[v] = sign;
    new_cols.push_back(v);
    new_signs.push_back(sign);
    taken[pos] = 1;
  }

  std::vector<double> delta(scope.size(), 0.0);
  scope.accumulate_columns(new_cols, new_signs, delta);

  std::size_t out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (taken[i]) continue;
    const std::uint32_t v = state.free[i];
    state.free[out] = v;
    state.relaxed[out] = state.relaxed[i];
    coupling.values[out] = coupling.values[i] + delta[v];
    ++out;
  }
  state.free.resize(out);
  state.relaxed.resize(out);
  coupling.values.resize(out);
  rescale_to(state.relaxed, std::sqrt(static_cast<double>(out)));
  return chosen.size();
}

std::vector<double> cpm_step(const LinearOperator& free_block,
                             std::span<const double> relaxed,
                             std::span<const double> coupling,
                             std::uint64_t seed) {
  const std::size_t k = relaxed.size();
  if (free_block.size() != k || coupling.size() != k) {
    throw ValidationError("constrained power step: size mismatch");
  }
  const double radius = std::sqrt(static_cast<double>(k));
  std::vector<double> s(relaxed.begin(), relaxed.end());
  std::vector<double> y(k);
  for (int attempt = 0; attempt < 2; ++attempt) {
    free_block.apply(s, y);
    for (std::size_t i = 0; i < k; ++i) y[i] += coupling[i];
    const double ny = norm2(y);
    if (ny > 0.0 && std::isfinite(ny)) {
      const double f = radius / ny;
      for (double& v : y) v *= f;
      return y;
    }
    if (!std::isfinite(ny)) break;
    std::vector<double> noise = seeded_start(free_block, seed, 17 + attempt);
    const double nn = norm2(noise);
    for (std::size_t i = 0; i < k; ++i) {
      s[i] += nn > 0.0 ? 1e-8 * radius * noise[i] / nn : 0.0;
    }
  }
  throw NumericalError("constrained power step produced a zero vector");
}

CpmResult cpm_solve(const LinearOperator& free_block,
                    std::span<const double> relaxed,
                    std::span<const double> coupling, const SsrConfig& cfg,
                    bool record_objective) {
  const std::size_t k = relaxed.size();
  const std::size_t cap = cfg.inner_max_iter != 0 ? cfg.inner_max_iter
                                                  : 10 * k + 1000;
  const double radius = std::sqrt(static_cast<double>(k));

  CpmResult res;
  res.relaxed.assign(relaxed.begin(), relaxed.end());
  if (norm2(res.relaxed) == 0.0) {
    res.relaxed = seeded_start(free_block, cfg.seed, 0);
  }
  rescale_to(res.relaxed, radius);
  if (record_objective) {
    res.objective_trace.push_back(
        residual_objective(free_block, res.relaxed, coupling));
  }

  std::vector<double> y(k);
  while (res.iterations < cap) {
    free_block.apply(res.relaxed, y);
    ++res.iterations;
    double quad = 0.0;
    double lin = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      quad += res.relaxed[i] * y[i];
      lin += res.relaxed[i] * coupling[i];
      y[i] += coupling[i];
    }
    const double ny = norm2(y);
    if (!std::isfinite(ny)) throw NumericalError("constrained power step overflowed");
    if (ny > 0.0) {
      for (double& v : y) v *= radius / ny;
    } else {
      try {
        y = cpm_step(free_block, res.relaxed, coupling, cfg.seed);
      } catch (const NumericalError&) {
        // Operator and coupling vanish around the iterate: nothing to improve.
        res.converged = true;
        break;
      }
    }
    if (record_objective && res.iterations > 1) {
      res.objective_trace.push_back(quad + 2.0 * lin);
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      diff += (y[i] - res.relaxed[i]) * (y[i] - res.relaxed[i]);
    }
    res.relaxed.swap(y);
    if (std::sqrt(diff) < cfg.inner_tol * radius) {
      res.converged = true;
      break;
    }
  }
  if (record_objective) {
    res.objective_trace.push_back(
        residual_objective(free_block, res.relaxed, coupling));
  }
  return res;
}

double positive_definite_shift(const LinearOperator& free_block,
                               const SsrConfig& cfg) {
  if (free_block.size() == 0) return 0.0;
  PowerConfig probe;
  probe.tol = kShiftProbeTol;
  probe.max_iter = kShiftProbeIterations;
  probe.seed = cfg.seed;
  EigenEstimate est;
  try {
    est = power_iterate(free_block, probe);
  } catch (const NullOperatorError&) {
    return 0.0;
  }
  return est.rayleigh <= 0.0 ? std::abs(est.rayleigh) * (1.0 + kShiftMargin)
                             : 0.0;
}

BisectionResult ssr_bipartition(const ModularityOperator& scope,
                                const SsrConfig& cfg) {
  cfg.validate();
  const std::size_t n = scope.size();
  if (n < 2) throw ValidationError("bipartition needs at least two vertices");

  BisectionResult out;
  const std::vector<double> start = field_start(scope, cfg);
  out.initial = leading_eigenvector(scope, cfg.power(), start);

  RoundingState state = RoundingState::from_relaxed(out.initial.vector);
  CouplingVector coupling;
  coupling.values.assign(n, 0.0);

  while (state.num_free() > 0) {
    partial_round(state, coupling, scope, cfg);
    ++out.outer_iterations;
    if (state.num_free() == 0) break;

    const ModularityOperator block = scope.restrict_to(state.free);
    const double shift = positive_definite_shift(block, cfg);
    CpmResult cpm = cpm_solve(block.with_shift(shift), state.relaxed,
                              coupling.values, cfg);
    out.inner_iterations += cpm.iterations;
    out.inner_work += cpm.iterations * state.num_free();
    out.inner_converged = out.inner_converged && cpm.converged;
    state.relaxed = std::move(cpm.relaxed);
  }
  out.signs = std::move(state.fixed);
  return out;
}

}  // namespace ssr
