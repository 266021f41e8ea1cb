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

// Dense and brute-force reference computations. Nothing here calls into the
// operator, spectral or relaxation code of the library.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/linear_operator.hpp"

namespace ssr_test {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Rows are sources. Undirected edges fill both triangles.
inline MatrixXd dense_adjacency(const ssr::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  MatrixXd a = MatrixXd::Zero(n, n);
  for (const ssr::Edge& e : g.edges()) {
    a(e.src, e.dst) += e.weight;
    if (!g.directed()) a(e.dst, e.src) += e.weight;
  }
  return a;
}

inline double adjacency_total(const MatrixXd& a) { return a.sum(); }

/// Symmetrized modularity matrix ½(B + Bᵀ) with B_ij = A_ij − o_i·n_j / W.
inline MatrixXd dense_modularity_matrix(const ssr::Graph& g) {
  const MatrixXd a = dense_adjacency(g);
  const double w = adjacency_total(a);
  const VectorXd out = a.rowwise().sum();
  const VectorXd in = a.colwise().sum().transpose();
  const MatrixXd b = a - out * in.transpose() / w;
  return 0.5 * (b + b.transpose());
}

/// Generalized matrix of a vertex group: entries of `b` on the group with
/// each diagonal entry reduced by its row sum over the group.
inline MatrixXd group_matrix(const MatrixXd& b, std::span<const std::uint32_t> ids) {
  const auto k = static_cast<Eigen::Index>(ids.size());
  MatrixXd out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = b(ids[i], ids[j]);
  }
  for (Eigen::Index i = 0; i < k; ++i) out(i, i) -= out.row(i).sum();
  return out;
}

/// Q by the double sum over all vertex pairs.
inline double pairwise_modularity(const ssr::Graph& g,
                                  std::span<const std::uint32_t> labels) {
  const MatrixXd a = dense_adjacency(g);
  const double w = adjacency_total(a);
  const VectorXd out = a.rowwise().sum();
  const VectorXd in = a.colwise().sum().transpose();
  double q = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (labels[i] == labels[j]) q += a(i, j) - out(i) * in(j) / w;
    }
  }
  return q / w;
}

struct Eigenpair {
  double value = 0.0;
  VectorXd vector;
};

/// Largest algebraic eigenpair of a symmetric matrix.
inline Eigenpair top_eigenpair(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  const Eigen::Index last = m.rows() - 1;
  return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

inline VectorXd eigenvalues(const MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<MatrixXd>(m, Eigen::EigenvaluesOnly)
      .eigenvalues();
}

/// Best Q over every partition of the vertex set, by walking restricted
/// growth strings. Bell(n) partitions; meant for n ≤ 10.
inline double exhaustive_best_modularity(const ssr::Graph& g) {
  const std::size_t n = g.num_vertices();
  const MatrixXd a = dense_adjacency(g);
  const double w = adjacency_total(a);
  const VectorXd out = a.rowwise().sum();
  const VectorXd in = a.colwise().sum().transpose();
  const MatrixXd b = a - out * in.transpose() / w;

  std::vector<std::uint32_t> rgs(n, 0);
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t pos,
                                                             std::uint32_t top) {
    if (pos == n) {
      double q = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (rgs[i] == rgs[j]) q += b(i, j);
        }
      }
      best = std::max(best, q / w);
      return;
    }
    for (std::uint32_t c = 0; c <= top + 1; ++c) {
      rgs[pos] = c;
      walk(pos + 1, std::max(top, c));
    }
  };
  rgs[0] = 0;
  if (n == 1) return 0.0;
  walk(1, 0);
  return best;
}

struct BestSplit {
  double gain = -std::numeric_limits<double>::infinity();
  std::vector<int> signs;
};

/// Maximizes sᵀ·M·s / (2W) over all ±1 vectors.
inline BestSplit exhaustive_best_split(const MatrixXd& m, double w) {
  const auto n = static_cast<std::size_t>(m.rows());
  BestSplit best;
  VectorXd s(m.rows());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) s(i) = (mask >> i) & 1 ? 1.0 : -1.0;
    const double gain = s.dot(m * s) / (2.0 * w);
    if (gain > best.gain + 1e-15) {
      best.gain = gain;
      best.signs.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) best.signs[i] = static_cast<int>(s(i));
    }
  }
  return best;
}

/// One projected power step for max vᵀAv with ‖v‖ = r and Gv = c:
/// v ← P·A·v / ‖P·A·v‖ · √(r² − wᵀw) + w, where P projects onto Gu = 0 and w is
/// the point of Gv = c closest to the origin.
inline VectorXd projected_power_step(const MatrixXd& a, const MatrixXd& g,
                                     const VectorXd& c, double r,
                                     const VectorXd& v) {
  const MatrixXd ggt_inv = (g * g.transpose()).inverse();
  const MatrixXd p =
      MatrixXd::Identity(a.rows(), a.cols()) - g.transpose() * ggt_inv * g;
  const VectorXd w = g.transpose() * ggt_inv * c;
  const VectorXd pav = p * (a * v);
  return pav / pav.norm() * std::sqrt(r * r - w.squaredNorm()) + w;
}

/// Global maximizer of sᵀMs + 2bᵀs on ‖s‖ = radius for symmetric M, from the
/// secular equation ‖(λI − M)⁻¹b‖ = radius with λ > λ_max(M). Assumes b has
/// a component along the top eigenvector.
inline VectorXd sphere_quadratic_maximizer(const MatrixXd& m, const VectorXd& b,
                                           double radius) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  const VectorXd lam = es.eigenvalues();
  const VectorXd beta = es.eigenvectors().transpose() * b;
  auto norm_at = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      const double t = beta(i) / (mu - lam(i));
      s += t * t;
    }
    return std::sqrt(s);
  };
  const double top = lam(lam.size() - 1);
  double lo = top;
  double hi = top + 1.0;
  while (norm_at(hi) > radius) hi = top + 2.0 * (hi - top);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm_at(mid) > radius) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mu = 0.5 * (lo + hi);
  VectorXd coef(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) coef(i) = beta(i) / (mu - lam(i));
  return es.eigenvectors() * coef;
}

/// LinearOperator over a dense symmetric matrix.
class DenseOperator final : public ssr::LinearOperator {
 public:
  explicit DenseOperator(MatrixXd m, bool ones_null = false)
      : m_(std::move(m)), ones_null_(ones_null) {}

  std::size_t size() const override { return static_cast<std::size_t>(m_.rows()); }
  void apply(std::span<const double> x, std::span<double> y) const override {
    Eigen::Map<const VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::Map<VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    yv.noalias() = m_ * xv;
  }
  bool ones_in_null_space() const override { return ones_null_; }

 private:
  MatrixXd m_;
  bool ones_null_;
};

inline VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline std::vector<double> to_std(const VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

/// G(n, p) with an optional weight range; at least one edge.
inline ssr::Graph random_graph(std::size_t n, double p, std::uint64_t seed,
                               bool directed = false, bool weighted = false) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> weight(0.5, 3.0);
  std::vector<ssr::Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j || !coin(rng)) continue;
      edges.push_back({i, j, weighted ? weight(rng) : 1.0});
    }
  }
  if (edges.empty()) edges.push_back({0, 1, 1.0});
  return ssr::Graph::from_edges(n, directed, edges, {}, weighted);
}

}  // namespace ssr_test
