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

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/matchings.hpp"
#include "support.hpp"

using namespace dimerlab;

TEST_SUITE("enum-oracle") {

TEST_CASE("four cycle has two matchings") {
  auto g = dimerlab::testing::four_cycle();
  auto all = enumerate_matchings(g, {});
  CHECK(all.size() == 2);
  WeightMap w({Scalar(2), Scalar(3), Scalar(5), Scalar(7)});
  CHECK(partition_function(g, w) == Scalar(2 * 5 + 3 * 7));
  CHECK(partition_function(g, w, MonomerSet{{0, 1}}) == Scalar(5));
  CHECK(partition_function(g, w, MonomerSet{{0, 2}}) == Scalar(0));
  CHECK(monomer_correlation(g, w, MonomerSet{{1, 2}}) == Scalar(Rational(7, 31)));
}

TEST_CASE("ladders count Fibonacci numbers") {
  std::size_t a = 1;
  std::size_t b = 2;
  for (std::size_t n = 2; n <= 12; ++n) {
    auto doc = grid_graph(2, n);
    const std::size_t next = a + b;
    a = b;
    b = next;
    CHECK(partition_function(doc.graph, doc.weights) == Scalar(static_cast<long>(a)));
  }
}

TEST_CASE("matchings are perfect and distinct") {
  auto doc = grid_graph(4, 4);
  auto all = enumerate_matchings(doc.graph, MonomerSet{{0, 5}});
  std::set<std::vector<EdgeId>> distinct;
  for (const auto& m : all) {
    std::vector<int> cover(doc.graph.vertex_count(), 0);
    for (EdgeId e : m.edges) {
      ++cover[doc.graph.edge(e).u];
      ++cover[doc.graph.edge(e).v];
    }
    for (VertexId v = 0; v < cover.size(); ++v) CHECK(cover[v] == ((v == 0 || v == 5) ? 0 : 1));
    distinct.insert(m.edges);
  }
  CHECK(distinct.size() == all.size());
  CHECK(partition_function(doc.graph, doc.weights) == Scalar(36));
}

TEST_CASE("partition table agrees with streaming enumeration") {
  std::mt19937_64 rng(11);
  for (std::uint64_t i = 0; i < 15; ++i) {
    auto doc = dimerlab::testing::fixture(5, i, 14);
    PartitionTable table(doc.graph, doc.weights);
    CHECK(table.z() == partition_function(doc.graph, doc.weights));
    const std::size_t n = doc.graph.vertex_count();
    for (int t = 0; t < 5; ++t) {
      VertexId x = rng() % n;
      VertexId y = rng() % n;
      if (x == y) continue;
      MonomerSet m{{x, y}};
      CHECK(table.z(m) == partition_function(doc.graph, doc.weights, m));
      CHECK(table.correlation(m) == monomer_correlation(doc.graph, doc.weights, m));
    }
  }
}

TEST_CASE("zero partition function is reported") {
  auto g = dimerlab::testing::make_graph(
      {dimerlab::testing::pt(0, 0), dimerlab::testing::pt(1, 0), dimerlab::testing::pt(2, 0), dimerlab::testing::pt(1, 1)},
      {{0, 1}, {1, 2}, {1, 3}});
  auto w = WeightMap::uniform(g);
  CHECK(partition_function(g, w) == Scalar(0));
  try {
    monomer_correlation(g, w, MonomerSet{{0, 2}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroPartitionFunction);
  }
}

TEST_CASE("size guard") {
  auto doc = grid_graph(6, 8);
  EnumerationOptions strict;
  strict.force_large = false;
  try {
    check_enumeration_size(doc.graph, strict);
    FAIL("expected the size guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSizeGuard);
  }
  EnumerationOptions forced;
  forced.force_large = true;
  CHECK_NOTHROW(check_enumeration_size(doc.graph, forced));
  setenv("DIMERLAB_FORCE_LARGE", "1", 1);
  CHECK(EnumerationOptions::force_large_from_environment());
  setenv("DIMERLAB_FORCE_LARGE", "0", 1);
  CHECK_FALSE(EnumerationOptions::force_large_from_environment());
  unsetenv("DIMERLAB_FORCE_LARGE");
}

}  // TEST_SUITE
