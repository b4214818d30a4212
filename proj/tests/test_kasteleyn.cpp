// Copyright 2026 The dimerlab Authors.
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

#include "doctest.h"
#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/matchings.hpp"
#include "support.hpp"

using namespace dimerlab;

TEST_SUITE("kasteleyn") {

TEST_CASE("orientation is admissible on random fixtures") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto doc = dimerlab::testing::fixture(21, i, 16);
    auto o = fkt_orientation(doc.graph);
    CHECK(inadmissible_faces(doc.graph, o).empty());
    auto counts = clockwise_counts(doc.graph, o);
    CHECK(counts.size() == doc.graph.faces().size());
  }
}

TEST_CASE("every matching enters the Pfaffian with one sign") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto doc = dimerlab::testing::fixture(22, i, 12);
    auto o = fkt_orientation(doc.graph);
    auto all = enumerate_matchings(doc.graph, {});
    REQUIRE_FALSE(all.empty());
    const int s = pfaffian_term_sign(doc.graph, o, all.front().edges);
    for (const auto& m : all) CHECK(pfaffian_term_sign(doc.graph, o, m.edges) == s);
  }
}

TEST_CASE("Pfaffian magnitude equals enumeration") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto doc = dimerlab::testing::fixture(23, i, 16);
    CHECK(fast_partition_function(doc.graph, doc.weights) == partition_function(doc.graph, doc.weights));
  }
  const long expected[] = {2, 36, 6728};
  for (std::size_t n = 2; n <= 6; n += 2) {
    auto doc = grid_graph(n, n);
    CHECK(fast_partition_function(doc.graph, doc.weights) == Scalar(expected[n / 2 - 1]));
  }
}

TEST_CASE("depleted and disconnected graphs") {
  auto doc = grid_graph(4, 4);
  for (VertexId x = 0; x < 16; ++x) {
    for (VertexId y = x + 1; y < 16; ++y) {
      auto sub = deplete(doc.graph, MonomerSet{{x, y}});
      auto w = restrict_weights(doc.graph, doc.weights, sub);
      CHECK(fast_partition_function(sub, w) == partition_function(doc.graph, doc.weights, MonomerSet{{x, y}}));
    }
  }
}

TEST_CASE("no matching gives zero") {
  using dimerlab::testing::pt;
  auto star = dimerlab::testing::make_graph({pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)}, {{0, 1}, {1, 2}, {1, 3}});
  CHECK_FALSE(find_perfect_matching(star).has_value());
  CHECK(fast_partition_function(star, WeightMap::uniform(star)) == Scalar(0));
}

TEST_CASE("gauge flips multiply by the parity of B") {
  std::mt19937_64 rng(31);
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto doc = dimerlab::testing::fixture(24, i, 12);
    std::vector<VertexId> b;
    for (VertexId v = 0; v < doc.graph.vertex_count(); ++v) {
      if (rng() % 2) b.push_back(v);
    }
    auto report = verify_gauge(doc.graph, doc.weights, b);
    CHECK(report.equal);
    const Scalar z = partition_function(doc.graph, doc.weights);
    CHECK(report.expected == (b.size() % 2 ? -z : z));
    auto flipped = gauge_flip(doc.graph, doc.weights, b);
    CHECK(flipped == edge_flip(doc.graph, doc.weights, edge_boundary(doc.graph, b)));
  }
}

TEST_CASE("edge flip errors") {
  auto g = dimerlab::testing::four_cycle();
  auto w = WeightMap::uniform(g);
  try {
    edge_flip(g, w, {7});
    FAIL("unknown edge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownEdge);
  }
  auto flipped = edge_flip(g, w, {1, 3});
  CHECK(flipped[1] == Scalar(-1));
  CHECK(flipped[0] == Scalar(1));
}

}  // TEST_SUITE
