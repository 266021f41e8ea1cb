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

#include "ssr/modularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ssr/errors.hpp"

namespace ssr {

struct ModularityOperator::Block {
  OperatorMode mode = OperatorMode::kUndirected;
  double adjacency_sum = 0.0;
  bool principal = false;

  // Local adjacency over scope rows; `t_*` is the transpose (directed only).
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> cols;
  std::vector<double> weights;
  std::vector<std::size_t> t_offsets;
  std::vector<std::uint32_t> t_cols;
  std::vector<double> t_weights;

  std::vector<double> out_deg;
  std::vector<double> in_deg;  // empty when undirected
  std::vector<double> diag;    // empty when identically zero
  std::vector<VertexId> ids;

  KernelOptions kernel;

  bool directed() const { return mode == OperatorMode::kDirectedSymmetrized; }
  std::span<const double> in_degrees() const {
    return directed() ? std::span<const double>(in_deg)
                      : std::span<const double>(out_deg);
  }
};

std::size_t ModularityOperator::size() const { return block_->ids.size(); }
std::uint64_t ModularityOperator::row_key(std::size_t i) const {
  return block_->ids[i];
}
bool ModularityOperator::ones_in_null_space() const { return !block_->principal; }
OperatorMode ModularityOperator::mode() const noexcept { return block_->mode; }
double ModularityOperator::adjacency_sum() const noexcept {
  return block_->adjacency_sum;
}
std::size_t ModularityOperator::num_entries() const noexcept {
  return block_->cols.size();
}
std::span<const VertexId> ModularityOperator::global_ids() const noexcept {
  return block_->ids;
}
std::span<const double> ModularityOperator::diagonal_correction() const noexcept {
  return block_->diag;
}
const KernelOptions& ModularityOperator::kernel() const noexcept {
  return block_->kernel;
}

namespace {

// Row sums of the unrestricted operator over the scope itself; this is what
// makes the group operator annihilate the all-ones vector.
template <class B>
std::vector<double> group_diagonal(const B& b) {
  const std::size_t n = b.ids.size();
  const double w = b.adjacency_sum;
  std::vector<double> diag(n, 0.0);
  if (w <= 0.0) return diag;

  double out_total = 0.0;
  double in_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) out_total += b.out_deg[i];
  auto in = b.in_degrees();
  for (std::size_t i = 0; i < n; ++i) in_total += in[i];

  for (std::size_t i = 0; i < n; ++i) {
    double internal = 0.0;
    for (std::size_t e = b.offsets[i]; e < b.offsets[i + 1]; ++e) {
      internal += b.weights[e];
    }
    if (b.directed()) {
      double internal_in = 0.0;
      for (std::size_t e = b.t_offsets[i]; e < b.t_offsets[i + 1]; ++e) {
        internal_in += b.t_weights[e];
      }
      diag[i] = 0.5 * (internal + internal_in) -
                (b.out_deg[i] * in_total + in[i] * out_total) / (2.0 * w);
    } else {
      diag[i] = internal - b.out_deg[i] * (out_total / w);
    }
  }
  return diag;
}

void copy_rows(std::span<const std::size_t> offsets,
               std::span<const std::uint32_t> cols,
               std::span<const double> weights,
               std::span<const std::uint32_t> rows,
               std::span<const std::uint32_t> remap, std::uint32_t absent,
               std::vector<std::size_t>& out_offsets,
               std::vector<std::uint32_t>& out_cols,
               std::vector<double>& out_weights) {
  out_offsets.assign(1, 0);
  out_offsets.reserve(rows.size() + 1);
  for (std::uint32_t r : rows) {
    for (std::size_t e = offsets[r]; e < offsets[r + 1]; ++e) {
      const std::uint32_t c = remap[cols[e]];
      if (c == absent) continue;
      out_cols.push_back(c);
      out_weights.push_back(weights[e]);
    }
    out_offsets.push_back(out_cols.size());
  }
}

}  // namespace

ModularityOperator ModularityOperator::whole_graph(const Graph& g,
                                                   KernelOptions opts) {
  auto b = std::make_shared<Block>();
  b->mode = g.directed() ? OperatorMode::kDirectedSymmetrized
                         : OperatorMode::kUndirected;
  b->adjacency_sum = g.adjacency_sum();
  b->kernel = std::move(opts);
  const std::size_t n = g.num_vertices();
  b->ids.resize(n);
  std::iota(b->ids.begin(), b->ids.end(), VertexId{0});
  b->offsets.assign(1, 0);
  b->offsets.reserve(n + 1);
  b->cols.reserve(g.num_entries());
  b->weights.reserve(g.num_entries());
  for (VertexId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto w = g.weights(v);
    b->cols.insert(b->cols.end(), nb.begin(), nb.end());
    b->weights.insert(b->weights.end(), w.begin(), w.end());
    b->offsets.push_back(b->cols.size());
  }
  b->out_deg.assign(g.out_degree().begin(), g.out_degree().end());
  if (g.directed()) {
    b->in_deg.assign(g.in_degree().begin(), g.in_degree().end());
    b->t_offsets.assign(1, 0);
    for (VertexId v = 0; v < n; ++v) {
      auto nb = g.in_neighbors(v);
      auto w = g.in_weights(v);
      b->t_cols.insert(b->t_cols.end(), nb.begin(), nb.end());
      b->t_weights.insert(b->t_weights.end(), w.begin(), w.end());
      b->t_offsets.push_back(b->t_cols.size());
    }
  }
  // Row sums of the full modularity matrix vanish identically.
  return ModularityOperator(std::move(b));
}

ModularityOperator ModularityOperator::scoped(const Graph& g,
                                              const VertexSubset& scope,
                                              KernelOptions opts) {
  ModularityOperator whole = whole_graph(g, std::move(opts));
  if (scope.size() == g.num_vertices()) return whole;
  std::vector<std::uint32_t> rows(scope.ids().begin(), scope.ids().end());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= g.num_vertices() || (k > 0 && rows[k] <= rows[k - 1])) {
      throw ValidationError("scope must hold distinct in-range vertex ids");
    }
  }
  return whole.subscope(rows);
}

ModularityOperator ModularityOperator::derive(
    std::span<const std::uint32_t> local_rows, bool principal) const {
  const Block& parent = *block_;
  constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;
  std::vector<std::uint32_t> remap(parent.ids.size(), kAbsent);
  for (std::size_t k = 0; k < local_rows.size(); ++k) {
    const std::uint32_t r = local_rows[k];
    if (r >= parent.ids.size() || remap[r] != kAbsent ||
        (k > 0 && r < local_rows[k - 1])) {
      throw ValidationError("sub-block rows must be ascending, distinct and "
                            "inside the parent scope");
    }
    remap[r] = static_cast<std::uint32_t>(k);
  }

  auto b = std::make_shared<Block>();
  b->mode = parent.mode;
  b->adjacency_sum = parent.adjacency_sum;
  b->principal = principal || parent.principal;
  b->kernel = parent.kernel;
  copy_rows(parent.offsets, parent.cols, parent.weights, local_rows, remap,
            kAbsent, b->offsets, b->cols, b->weights);
  if (parent.directed()) {
    copy_rows(parent.t_offsets, parent.t_cols, parent.t_weights, local_rows,
              remap, kAbsent, b->t_offsets, b->t_cols, b->t_weights);
  }
  const std::size_t k = local_rows.size();
  b->ids.resize(k);
  b->out_deg.resize(k);
  if (parent.directed()) b->in_deg.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    b->ids[i] = parent.ids[local_rows[i]];
    b->out_deg[i] = parent.out_deg[local_rows[i]];
    if (parent.directed()) b->in_deg[i] = parent.in_deg[local_rows[i]];
  }

  if (principal) {
    if (!parent.diag.empty()) {
      b->diag.resize(k);
      for (std::size_t i = 0; i < k; ++i) b->diag[i] = parent.diag[local_rows[i]];
    }
  } else {
    b->diag = group_diagonal(*b);
  }
  return ModularityOperator(std::move(b));
}

ModularityOperator ModularityOperator::subscope(
    std::span<const std::uint32_t> local_rows) const {
  if (block_->principal) {
    throw ValidationError("cannot carve a group scope out of a principal block");
  }
  return derive(local_rows, /*principal=*/false);
}

ModularityOperator ModularityOperator::restrict_to(
    std::span<const std::uint32_t> local_rows) const {
  ModularityOperator out = derive(local_rows, /*principal=*/true);
  out.shift_ = shift_;
  return out;
}

ModularityOperator ModularityOperator::with_shift(double shift) const {
  if (!std::isfinite(shift)) throw ValidationError("shift must be finite");
  ModularityOperator out = *this;
  out.shift_ = shift;
  return out;
}

void ModularityOperator::apply(std::span<const double> x,
                               std::span<double> y) const {
  const Block& b = *block_;
  const std::size_t n = b.ids.size();
  if (x.size() != n || y.size() != n) {
    throw ValidationError("operator of size " + std::to_string(n) +
                          " applied to vector of size " +
                          std::to_string(x.size()));
  }
  const ChunkPlan plan{n, std::max<std::size_t>(1, b.kernel.chunk_rows)};
  const std::size_t chunks = plan.count();
  const bool directed = b.directed();
  auto in = b.in_degrees();

  // Phase 1: degree-weighted sums, reduced in fixed chunk order.
  std::vector<double> part_out(chunks, 0.0);
  std::vector<double> part_in(directed ? chunks : 0, 0.0);
  for_each_chunk(b.kernel.pool, plan,
                 [&](std::size_t lo, std::size_t hi, std::size_t c) {
                   double so = 0.0;
                   for (std::size_t i = lo; i < hi; ++i) so += b.out_deg[i] * x[i];
                   part_out[c] = so;
                   if (directed) {
                     double si = 0.0;
                     for (std::size_t i = lo; i < hi; ++i) si += in[i] * x[i];
                     part_in[c] = si;
                   }
                 });
  double dot_out = 0.0;
  for (double p : part_out) dot_out += p;
  double dot_in = 0.0;
  for (double p : part_in) dot_in += p;

  const double w = b.adjacency_sum;
  const double inv = w > 0.0 ? 1.0 / w : 0.0;
  const double shift = shift_;
  const bool has_diag = !b.diag.empty();

  // Phase 2: independent rows.
  for_each_chunk(
      b.kernel.pool, plan, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t i = lo; i < hi; ++i) {
          double acc = 0.0;
          for (std::size_t e = b.offsets[i]; e < b.offsets[i + 1]; ++e) {
            acc += b.weights[e] * x[b.cols[e]];
          }
          double yi;
          if (directed) {
            double acc_t = 0.0;
            for (std::size_t e = b.t_offsets[i]; e < b.t_offsets[i + 1]; ++e) {
              acc_t += b.t_weights[e] * x[b.t_cols[e]];
            }
            yi = 0.5 * (acc + acc_t) -
                 0.5 * inv * (b.out_deg[i] * dot_in + in[i] * dot_out);
          } else {
            yi = acc - inv * b.out_deg[i] * dot_out;
          }
          if (has_diag) yi -= b.diag[i] * x[i];
          y[i] = yi + shift * x[i];
        }
      });

  if (b.kernel.counter) {
    b.kernel.counter->matvecs.fetch_add(1, std::memory_order_relaxed);
    b.kernel.counter->work.fetch_add(n + b.cols.size() + b.t_cols.size(),
                                     std::memory_order_relaxed);
  }
}

std::vector<double> ModularityOperator::apply(std::span<const double> x) const {
  std::vector<double> y(size());
  apply(x, y);
  return y;
}

void ModularityOperator::accumulate_columns(std::span<const std::uint32_t> cols,
                                            std::span<const double> values,
                                            std::span<double> y) const {
  const Block& b = *block_;
  const std::size_t n = b.ids.size();
  if (cols.size() != values.size() || y.size() != n) {
    throw ValidationError("accumulate_columns: size mismatch");
  }
  auto in = b.in_degrees();
  double t_out = 0.0;
  double t_in = 0.0;
  const bool directed = b.directed();
  const double half = directed ? 0.5 : 1.0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::uint32_t j = cols[k];
    if (j >= n) throw ValidationError("accumulate_columns: column out of range");
    const double v = values[k];
    t_out += b.out_deg[j] * v;
    t_in += in[j] * v;
    for (std::size_t e = b.offsets[j]; e < b.offsets[j + 1]; ++e) {
      y[b.cols[e]] += half * b.weights[e] * v;
    }
    if (directed) {
      for (std::size_t e = b.t_offsets[j]; e < b.t_offsets[j + 1]; ++e) {
        y[b.t_cols[e]] += half * b.t_weights[e] * v;
      }
    }
  }
  const double w = b.adjacency_sum;
  if (w <= 0.0) return;
  for (std::size_t i = 0; i < n; ++i) {
    if (directed) {
      y[i] -= (b.out_deg[i] * t_in + in[i] * t_out) / (2.0 * w);
    } else {
      y[i] -= b.out_deg[i] * t_out / w;
    }
  }
}

PartitionScore modularity(const Graph& g, std::span<const CommunityId> labels) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n) {
    throw ValidationError("label vector has " + std::to_string(labels.size()) +
                          " entries for " + std::to_string(n) + " vertices");
  }
  CommunityId max_label = 0;
  for (CommunityId c : labels) max_label = std::max(max_label, c);
  const std::size_t k = static_cast<std::size_t>(max_label) + 1;
  if (k > 4 * n + 1024) {
    throw ValidationError("community ids must be dense (max id " +
                          std::to_string(max_label) + " for " +
                          std::to_string(n) + " vertices)");
  }

  std::vector<double> internal(k, 0.0);
  std::vector<double> out_sum(k, 0.0);
  std::vector<double> in_sum(k, 0.0);
  auto out_deg = g.out_degree();
  auto in_deg = g.in_degree();
  for (VertexId v = 0; v < n; ++v) {
    const CommunityId c = labels[v];
    out_sum[c] += out_deg[v];
    in_sum[c] += in_deg[v];
    auto nb = g.neighbors(v);
    auto w = g.weights(v);
    for (std::size_t e = 0; e < nb.size(); ++e) {
      if (labels[nb[e]] == c) internal[c] += w[e];
    }
  }

  PartitionScore score;
  score.per_community.assign(k, 0.0);
  const double w = g.adjacency_sum();
  if (w <= 0.0) return score;
  for (std::size_t c = 0; c < k; ++c) {
    score.per_community[c] = internal[c] / w - (out_sum[c] / w) * (in_sum[c] / w);
  }
  for (double contribution : score.per_community) score.q += contribution;
  return score;
}

double bisection_delta_q(const ModularityOperator& op,
                         std::span<const double> s) {
  if (s.size() != op.size()) {
    throw ValidationError("sign vector length does not match operator size");
  }
  for (double v : s) {
    if (v != 1.0 && v != -1.0) {
      throw ValidationError("sign vector entries must be exactly +1 or -1");
    }
  }
  const double w = op.adjacency_sum();
  if (w <= 0.0) return 0.0;
  std::vector<double> bs = op.apply(s);
  double quad = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) quad += s[i] * bs[i];
  quad -= op.shift() * static_cast<double>(s.size());
  return quad / (2.0 * w);
}

double bisection_delta_q(const ModularityOperator& op,
                         std::span<const std::int8_t> s) {
  std::vector<double> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 1 && s[i] != -1) {
      throw ValidationError("sign vector entries must be exactly +1 or -1");
    }
    v[i] = s[i];
  }
  return bisection_delta_q(op, v);
}

}  // namespace ssr
