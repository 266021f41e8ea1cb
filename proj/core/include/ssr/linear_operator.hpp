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

namespace ssr {

/// Symmetric linear map applied matrix-free.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual std::size_t size() const = 0;
  /// y = Op * x. Both spans have length size().
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;

  /// Stable identity of row i, used to derive seeded start vectors that do not
  /// depend on how a scope was carved out of the graph.
  virtual std::uint64_t row_key(std::size_t i) const { return i; }

  /// True when the all-ones vector is known to be an eigenvector with
  /// eigenvalue shift(), so start vectors may be projected off it.
  virtual bool ones_in_null_space() const { return false; }
};

}  // namespace ssr
