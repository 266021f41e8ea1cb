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

#include <doctest.h>

#include <cmath>
#include <random>

#include "ssr/errors.hpp"
#include "ssr/nmi.hpp"

using namespace ssr;

namespace {

// Straight transcription of the closed form over a dense table.
double closed_form(const std::vector<CommunityId>& a, const std::vector<CommunityId>& b) {
  const std::size_t ra = *std::max_element(a.begin(), a.end()) + 1;
  const std::size_t rb = *std::max_element(b.begin(), b.end()) + 1;
  std::vector<std::vector<double>> n(ra, std::vector<double>(rb, 0.0));
  std::vector<double> row(ra, 0.0);
  std::vector<double> col(rb, 0.0);
  for (std::size_t v = 0; v < a.size(); ++v) {
    n[a[v]][b[v]] += 1;
    row[a[v]] += 1;
    col[b[v]] += 1;
  }
  const double total = static_cast<double>(a.size());
  double num = 0.0;
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) {
      if (n[i][j] > 0) num += n[i][j] * std::log(n[i][j] * total / (row[i] * col[j]));
    }
  }
  double den = 0.0;
  for (double x : row) {
    if (x > 0) den += x * std::log(x / total);
  }
  for (double x : col) {
    if (x > 0) den += x * std::log(x / total);
  }
  return -2.0 * num / den;
}

std::vector<CommunityId> random_labels(std::size_t n, CommunityId k, std::mt19937_64& rng) {
  std::uniform_int_distribution<CommunityId> d(0, k - 1);
  std::vector<CommunityId> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

}  // namespace

TEST_CASE("identical partitions score exactly one") {
  std::mt19937_64 rng(1);
  for (CommunityId k : {2u, 3u, 10u, 50u}) {
    const auto a = random_labels(500, k, rng);
    CHECK(nmi(a, a) == 1.0);
  }
  const std::vector<CommunityId> trivial(9, 0);
  CHECK(nmi(trivial, trivial) == 1.0);
}

TEST_CASE("renamed communities score exactly one") {
  const std::vector<CommunityId> a{0, 0, 1, 1, 2, 2, 3};
  const std::vector<CommunityId> b{5, 5, 0, 0, 9, 9, 1};
  CHECK(nmi(a, b) == 1.0);
}

TEST_CASE("crossed halves carry no information") {
  const std::vector<CommunityId> a{0, 0, 0, 0, 1, 1, 1, 1};
  const std::vector<CommunityId> b{0, 0, 1, 1, 0, 0, 1, 1};
  const double want = closed_form(a, b);
  CHECK(want == 0.0);
  CHECK(nmi(a, b) == doctest::Approx(want));
  const ContingencyTable t = contingency(a, b);
  for (const auto& cell : t.cells) CHECK(cell.count == 2);
}

TEST_CASE("agrees with the closed form") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const auto a = random_labels(200, 2 + rep % 7, rng);
    auto b = a;
    for (std::size_t i = 0; i < b.size(); i += 2 + rep % 5) b[i] = static_cast<CommunityId>(rng() % 6);
    CHECK(nmi(a, b) == doctest::Approx(closed_form(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("symmetric, bounded and label invariant") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng() % 60;
    const auto a = random_labels(n, 1 + rng() % 6, rng);
    const auto b = random_labels(n, 1 + rng() % 6, rng);
    const double x = nmi(a, b);
    CHECK(x == nmi(b, a));
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    std::vector<CommunityId> renamed(b);
    for (auto& l : renamed) l = 100 - l;
    CHECK(nmi(a, renamed) == x);
  }
}

TEST_CASE("independent labelings score near zero") {
  std::mt19937_64 rng(10000);
  const auto a = random_labels(10000, 2, rng);
  const auto b = random_labels(10000, 2, rng);
  CHECK(nmi(a, b) < 0.1);
}

TEST_CASE("contingency tables") {
  SUBCASE("identical partitions give a diagonal") {
    const std::vector<CommunityId> a{3, 3, 1, 0, 1};
    const ContingencyTable t = contingency(a, a);
    CHECK(t.total == 5);
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 3);
    for (const auto& cell : t.cells) CHECK(cell.row == cell.col);
    CHECK(t.at(0, 0) == 2);
    CHECK(t.at(0, 1) == 0);
  }
  SUBCASE("single communities") {
    const std::vector<CommunityId> a(7, 4);
    const ContingencyTable t = contingency(a, a);
    CHECK(t.rows() == 1);
    CHECK(t.cells.size() == 1);
    CHECK(t.cells[0].count == 7);
  }
  SUBCASE("sums are consistent") {
    std::mt19937_64 rng(2);
    const auto a = random_labels(300, 5, rng);
    const auto b = random_labels(300, 4, rng);
    const ContingencyTable t = contingency(a, b);
    std::vector<std::size_t> rows(t.rows(), 0);
    std::vector<std::size_t> cols(t.cols(), 0);
    std::size_t total = 0;
    for (const auto& cell : t.cells) {
      rows[cell.row] += cell.count;
      cols[cell.col] += cell.count;
      total += cell.count;
    }
    CHECK(total == 300);
    CHECK(rows == t.row_sums);
    CHECK(cols == t.col_sums);
  }
  SUBCASE("length mismatch") {
    const std::vector<CommunityId> a{0, 1};
    const std::vector<CommunityId> b{0};
    CHECK_THROWS_AS(contingency(a, b), ValidationError);
    CHECK_THROWS_AS(nmi(a, b), ValidationError);
  }
}

TEST_CASE("one trivial partition against a split one") {
  const std::vector<CommunityId> a(6, 0);
  const std::vector<CommunityId> b{0, 0, 0, 1, 1, 1};
  CHECK(nmi(a, b) == 0.0);
}
