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
#include <span>
#include <vector>

#include "ssr/modularity.hpp"
#include "ssr/partition.hpp"

namespace ssr {

/// Overlap counts between two labellings of the same vertex set, stored
/// sparsely. Rows follow the canonical community order of `a`, columns that
/// of `b`.
struct ContingencyTable {
  struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t count = 0;
  };

  std::size_t total = 0;
  std::vector<Cell> cells;  // non-zero, sorted by (row, col)
  std::vector<std::size_t> row_sums;
  std::vector<std::size_t> col_sums;

  std::size_t rows() const noexcept { return row_sums.size(); }
  std::size_t cols() const noexcept { return col_sums.size(); }
  std::size_t at(std::size_t r, std::size_t c) const;
};

ContingencyTable contingency(std::span<const CommunityId> a,
                             std::span<const CommunityId> b);

/// Normalized mutual information (natural log) in [0, 1]. Labellings that agree
/// up to renaming score exactly 1, including two single-community labellings.
double nmi(std::span<const CommunityId> a, std::span<const CommunityId> b);
double nmi(const Partition& a, const Partition& b);

}  // namespace ssr
