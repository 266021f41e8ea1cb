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

#include <set>

#include "ssr/errors.hpp"
#include "ssr/nmi.hpp"
#include "ssr/partitioner.hpp"
#include "ssr/planted.hpp"

using namespace ssr;

namespace {

std::size_t crossing_edges(const PlantedGraph& pg) {
  std::size_t n = 0;
  for (const Edge& e : pg.graph.edges()) {
    if (pg.truth.labels[e.src] != pg.truth.labels[e.dst]) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("no mixing gives separated blocks that detection recovers") {
  PlantedConfig cfg;
  cfg.n = 20;
  cfg.communities = 2;
  cfg.avg_degree = 4;
  cfg.max_degree = 8;
  cfg.mixing = 0.0;
  const PlantedGraph pg = generate_planted(cfg);
  CHECK(crossing_edges(pg) == 0);
  CHECK(pg.realized_mixing == 0.0);
  SsrConfig s;
  s.threads = 1;
  const DetectReport r = detect(pg.graph, s);
  CHECK(nmi(r.partition, pg.truth) == 1.0);
}

TEST_CASE("realized mixing is close to the request") {
  PlantedConfig cfg;
  cfg.n = 1000;
  cfg.communities = 40;
  cfg.avg_degree = 10;
  cfg.max_degree = 25;
  cfg.mixing = 0.1;
  cfg.seed = 2024;
  const PlantedGraph pg = generate_planted(cfg);
  const double crossing = static_cast<double>(crossing_edges(pg)) /
                          static_cast<double>(pg.graph.num_edges());
  CHECK(std::abs(crossing - 0.1) <= 0.03);
  CHECK(crossing == doctest::Approx(pg.realized_mixing).epsilon(1e-12));
}

TEST_CASE("simple graphs within the degree bound") {
  for (double mu : {0.0, 0.2, 0.5, 0.9}) {
    PlantedConfig cfg;
    cfg.n = 600;
    cfg.communities = 12;
    cfg.avg_degree = 12;
    cfg.max_degree = 20;
    cfg.mixing = mu;
    cfg.seed = 17;
    const PlantedGraph pg = generate_planted(cfg);
    const Graph& g = pg.graph;
    CHECK(g.num_edges() == 3600);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      CHECK(g.out_degree()[v] <= 20.0);
      std::set<VertexId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
      CHECK(nb.size() == g.neighbors(v).size());
      CHECK(nb.count(v) == 0);
    }
    const double avg = 2.0 * static_cast<double>(g.num_edges()) / 600.0;
    CHECK(std::abs(avg - 12.0) <= 0.05 * 12.0);
  }
}

TEST_CASE("balanced community sizes with the remainder up front") {
  PlantedConfig cfg;
  cfg.n = 103;
  cfg.communities = 5;
  cfg.avg_degree = 4;
  cfg.max_degree = 10;
  cfg.mixing = 0.3;
  const PlantedGraph pg = generate_planted(cfg);
  REQUIRE(pg.truth.num_communities() == 5);
  CHECK(pg.truth.communities[0].size() == 21);
  CHECK(pg.truth.communities[2].size() == 21);
  CHECK(pg.truth.communities[3].size() == 20);
  CHECK(pg.truth.communities[4].size() == 20);
}

TEST_CASE("same configuration, same graph") {
  PlantedConfig cfg;
  cfg.n = 300;
  cfg.communities = 6;
  cfg.avg_degree = 8;
  cfg.max_degree = 16;
  cfg.mixing = 0.25;
  cfg.seed = 99;
  const auto a = generate_planted(cfg).graph.edges();
  const auto b = generate_planted(cfg).graph.edges();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].src == b[i].src);
    CHECK(a[i].dst == b[i].dst);
  }
  cfg.seed = 100;
  const auto c = generate_planted(cfg).graph.edges();
  bool differs = c.size() != a.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i) {
    differs = a[i].src != c[i].src || a[i].dst != c[i].dst;
  }
  CHECK(differs);
}

TEST_CASE("infeasible configurations") {
  PlantedConfig base;
  base.n = 100;
  base.communities = 10;
  base.avg_degree = 8;
  base.max_degree = 16;
  base.mixing = 0.1;

  auto bad = base;
  bad.communities = 0;
  CHECK_THROWS_AS(generate_planted(bad), GenerationError);
  bad = base;
  bad.communities = 101;
  CHECK_THROWS_AS(generate_planted(bad), GenerationError);
  bad = base;
  bad.mixing = 1.5;
  CHECK_THROWS_AS(generate_planted(bad), GenerationError);
  bad = base;
  bad.max_degree = 7;
  CHECK_THROWS_AS(generate_planted(bad), GenerationError);

  // Intra degree (1 − μ)·d̄ against community size − 1 = 9.
  bad = base;
  bad.avg_degree = 12;
  bad.max_degree = 20;
  bad.mixing = 0.2;  // 9.6 > 9
  CHECK_THROWS_AS(generate_planted(bad), GenerationError);
  auto edge = bad;
  edge.mixing = 0.25;  // exactly 9
  CHECK_NOTHROW(generate_planted(edge));

  bad = base;
  bad.communities = 1;
  bad.mixing = 0.5;
  CHECK_THROWS_AS(generate_planted(bad), GenerationError);

  // Passes the up-front checks, but 45 edges cannot fit in the 25
  // inter-community pairs.
  PlantedConfig stall;
  stall.n = 10;
  stall.communities = 2;
  stall.avg_degree = 9;
  stall.max_degree = 9;
  stall.mixing = 1.0;
  CHECK_THROWS_AS(generate_planted(stall), GenerationError);
}
