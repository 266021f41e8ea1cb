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

#include "ssr/spectral.hpp"

#include <cmath>
#include <string>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

constexpr std::size_t kMaxRestarts = 3;

}  // namespace

void PowerConfig::validate() const {
  if (!(tol > 0.0)) throw ValidationError("power tolerance must be positive");
}

void ShiftedOperator::apply(std::span<const double> x,
                            std::span<double> y) const {
  base_.apply(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += shift_ * x[i];
}

std::vector<double> seeded_start(const LinearOperator& op, std::uint64_t seed,
                                 std::uint64_t attempt) {
  const std::size_t n = op.size();
  std::vector<double> v(n);
  const std::uint64_t stream = splitmix64(seed ^ splitmix64(attempt + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bits = splitmix64(stream ^ (op.row_key(i) * 0xD6E8FEB86659FD93ull));
    const double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
    v[i] = 2.0 * unit - 1.0;
  }
  if (op.ones_in_null_space() && n > 1) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;
  }
  return v;
}

EigenEstimate power_iterate(const LinearOperator& op, const PowerConfig& cfg,
                            std::span<const double> start) {
  cfg.validate();
  const std::size_t n = op.size();
  if (n == 0) throw ValidationError("power iteration on an empty operator");
  if (!start.empty() && start.size() != n) {
    throw ValidationError("start vector length does not match operator size");
  }

  EigenEstimate est;
  const std::size_t cap = cfg.iteration_cap(n);
  std::vector<double> v;
  std::vector<double> w(n);
  std::uint64_t attempt = 0;

  auto draw = [&]() -> bool {
    for (;;) {
      if (attempt == 0 && !start.empty()) {
        v.assign(start.begin(), start.end());
      } else {
        v = seeded_start(op, cfg.seed, attempt);
      }
      const double nv = norm2(v);
      if (nv > 0.0 && std::isfinite(nv)) {
        for (double& x : v) x /= nv;
        return true;
      }
      if (++attempt > kMaxRestarts) return false;
    }
  };
  if (!draw()) {
    throw NullOperatorError("no usable start vector for power iteration");
  }

  while (est.iterations < cap) {
    op.apply(v, w);
    ++est.iterations;
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) rayleigh += v[i] * w[i];
    const double nw = norm2(w);
    if (!(nw > 0.0) || !std::isfinite(nw)) {
      if (!std::isfinite(nw)) {
        throw NumericalError("power iteration diverged");
      }
      if (++attempt > kMaxRestarts || !draw()) {
        throw NullOperatorError(
            "operator maps every seeded start vector to zero");
      }
      continue;
    }
    est.rayleigh = rayleigh;
    if (cfg.record_trace) est.trace.push_back(rayleigh);

    double diff_minus = 0.0;
    double diff_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = w[i] / nw;
      diff_minus += (next - v[i]) * (next - v[i]);
      diff_plus += (next + v[i]) * (next + v[i]);
      v[i] = next;
    }
    if (std::sqrt(std::min(diff_minus, diff_plus)) < cfg.tol) {
      est.converged = true;
      break;
    }
  }
  est.vector = std::move(v);
  return est;
}

EigenEstimate leading_eigenvector(const LinearOperator& op,
                                  const PowerConfig& cfg,
                                  std::span<const double> start) {
  EigenEstimate first = power_iterate(op, cfg, start);
  if (first.rayleigh >= 0.0) return first;

  const double shift = std::abs(first.rayleigh) * (1.0 + kShiftMargin);
  ShiftedOperator shifted(op, shift);
  EigenEstimate second = power_iterate(shifted, cfg, start);
  second.rayleigh -= shift;
  second.shift = shift;
  second.iterations += first.iterations;
  for (double& r : second.trace) r -= shift;
  return second;
}

std::vector<std::int8_t> sign_round(std::span<const double> v) {
  std::vector<std::int8_t> s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] < 0.0 ? -1 : 1;
  return s;
}

}  // namespace ssr
