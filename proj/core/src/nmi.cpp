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

#include "ssr/nmi.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

// Entropy-style sum Σ c·log(c/n), accumulated in the given order.
double plogp_sum(const std::vector<std::size_t>& sums, double n) {
  double s = 0.0;
  for (std::size_t c : sums) {
    if (c > 0) s += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
  }
  return s;
}

}  // namespace

std::size_t ContingencyTable::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), Cell{r, c, 0},
                             [](const Cell& x, const Cell& y) {
                               return x.row != y.row ? x.row < y.row
                                                     : x.col < y.col;
                             });
  return it != cells.end() && it->row == r && it->col == c ? it->count : 0;
}

ContingencyTable contingency(std::span<const CommunityId> a,
                             std::span<const CommunityId> b) {
  if (a.size() != b.size()) {
    throw ValidationError("partitions cover different vertex sets (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + " vertices)");
  }
  const Partition pa = make_partition(a);
  const Partition pb = make_partition(b);

  ContingencyTable t;
  t.total = a.size();
  t.row_sums.resize(pa.num_communities());
  t.col_sums.resize(pb.num_communities());
  for (std::size_t r = 0; r < pa.num_communities(); ++r) {
    t.row_sums[r] = pa.communities[r].size();
    std::unordered_map<CommunityId, std::size_t> row;
    for (VertexId v : pa.communities[r]) ++row[pb.labels[v]];
    const std::size_t first = t.cells.size();
    for (const auto& [c, count] : row) t.cells.push_back({r, c, count});
    std::sort(t.cells.begin() + static_cast<std::ptrdiff_t>(first), t.cells.end(),
              [](const auto& x, const auto& y) { return x.col < y.col; });
  }
  for (std::size_t c = 0; c < pb.num_communities(); ++c) {
    t.col_sums[c] = pb.communities[c].size();
  }
  return t;
}

double nmi(std::span<const CommunityId> a, std::span<const CommunityId> b) {
  const ContingencyTable t = contingency(a, b);
  if (t.total == 0) throw ValidationError("partitions are empty");
  const double n = static_cast<double>(t.total);

  // Identical up to relabelling: one cell per row and per column.
  if (t.cells.size() == t.rows() && t.rows() == t.cols()) return 1.0;

  const double denom = plogp_sum(t.row_sums, n) + plogp_sum(t.col_sums, n);
  if (denom == 0.0) return 0.0;

  // Each term is symmetric in (row, col); summing the sorted terms makes the
  // result independent of argument order.
  std::vector<double> terms;
  terms.reserve(t.cells.size());
  for (const auto& cell : t.cells) {
    const double nkk = static_cast<double>(cell.count);
    const double rs = static_cast<double>(t.row_sums[cell.row]);
    const double cs = static_cast<double>(t.col_sums[cell.col]);
    terms.push_back(nkk * std::log(nkk * n / (rs * cs)));
  }
  std::sort(terms.begin(), terms.end());
  double mutual = 0.0;
  for (double x : terms) mutual += x;

  const double value = -2.0 * mutual / denom;
  return std::clamp(value, 0.0, 1.0);
}

double nmi(const Partition& a, const Partition& b) { return nmi(a.labels, b.labels); }

}  // namespace ssr
