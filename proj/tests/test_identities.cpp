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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/identities.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/suites.hpp"
#include "support.hpp"

using namespace dimerlab;

namespace {

int permutation_sign(std::vector<std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("pairings are enumerated with their signs") {
  std::size_t expected = 1;
  for (std::size_t n = 2; n <= 10; n += 2) {
    expected *= n - 1;
    std::size_t count = 0;
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
    for_each_pairing(n, [&](const Pairing& p) {
      ++count;
      seen.insert(p.pairs);
      std::vector<std::size_t> flat;
      for (auto [a, b] : p.pairs) {
        CHECK(a < b);
        flat.push_back(a);
        flat.push_back(b);
      }
      CHECK(p.sign == permutation_sign(flat));
    });
    CHECK(count == expected);
    CHECK(seen.size() == expected);
  }
}

TEST_CASE("pairing sum equals the matrix Pfaffian") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 8; n += 2) {
    auto a = dimerlab::testing::random_skew(n, rng, true);
    CHECK(pfaffian_over_pairings(a) == pfaffian(a));
  }
}

TEST_CASE("boundary correlations on a ladder") {
  auto doc = grid_graph(2, 4);
  PartitionTable table(doc.graph, doc.weights);
  auto order = outer_boundary_order(doc.graph);
  REQUIRE(order.size() == 8);
  std::vector<VertexId> sites{order[0], order[2], order[3], order[5]};
  CHECK(q_expansion(table, sites) == table.correlation(MonomerSet{sites}));
  auto s2 = two_point_matrix(table, sites);
  CHECK(s2.is_skew());
  CHECK(s2.at(0, 1) == table.correlation(MonomerSet{{sites[0], sites[1]}}));
  auto r = verify_theorem1(table, sites);
  CHECK(r.equal);
  CHECK(r.lhs == table.correlation(MonomerSet{sites}));
}

TEST_CASE("boundary Pfaffian on square grids") {
  for (std::size_t n : {4, 6}) {
    auto doc = grid_graph(4, n);
    PartitionTable table(doc.graph, doc.weights);
    auto order = outer_boundary_order(doc.graph);
    for (std::size_t s = 0; s + 6 < order.size(); s += 3) {
      auto r = verify_theorem1(table, {order[s], order[s + 1], order[s + 4], order[s + 6]});
      CHECK(r.equal);
    }
    std::vector<VertexId> scrambled{order[5], order[0], order[9], order[2]};
    CHECK(verify_theorem1(table, scrambled).equal);
    auto six = verify_theorem1(table, {order[0], order[1], order[3], order[4], order[7], order[10]});
    CHECK(six.equal);
  }
}

TEST_CASE("interior sites are rejected") {
  auto doc = grid_graph(4, 4);
  try {
    verify_theorem1(doc.graph, doc.weights, {0, 1, 2, 5});
    FAIL("interior site");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotOnBoundary);
  }
}

TEST_CASE("order-disorder Pfaffian on shipped fixtures") {
  for (const auto& path : pair_fixture_paths(default_data_dir())) {
    auto f = read_pair_fixture(path);
    const auto& g = f.document.graph;
    const auto& w = f.document.weights;
    auto r = verify_theorem2(g, w, f.pairs);
    CHECK_MESSAGE(r.equal, f.name);
    CHECK(r_expansion(g, w, f.pairs) == mu_correlator(g, w, f.pairs));
    MuCorrelatorCache cache(g, w, f.pairs);
    std::vector<std::size_t> all(f.pairs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(cache.correlator(all) == mu_correlator(g, w, f.pairs));
  }
}

TEST_CASE("path representations") {
  for (std::uint64_t i = 0; i < 8; ++i) {
    auto doc = dimerlab::testing::fixture(61, i, 10);
    PartitionTable table(doc.graph, doc.weights);
    const std::size_t n = doc.graph.vertex_count();
    for (VertexId y = 1; y < n; y += 2) {
      CHECK(two_point_path_representation(table, 0, y) == table.correlation(MonomerSet{{0, y}}));
    }
    if (n >= 6) {
      MonomerSet four{{0, 1, 2, n - 1}};
      CHECK(correlation_path_representation(table, four) == table.correlation(four));
    }
  }
}

TEST_CASE("simple paths avoid blocked vertices") {
  auto doc = grid_graph(2, 3);
  std::size_t all = 0;
  for_each_simple_path(doc.graph, 0, 5, 0, [&](const SimplePath& p) {
    CHECK(p.vertices.front() == 0);
    CHECK(p.vertices.back() == 5);
    CHECK(p.edges.size() + 1 == p.vertices.size());
    ++all;
  });
  CHECK(all == 4);
  std::size_t avoiding = 0;
  for_each_simple_path(doc.graph, 0, 5, std::uint64_t{1} << 4, [&](const SimplePath&) { ++avoiding; });
  CHECK(avoiding == 1);
}

TEST_CASE("loop gas reproduces the product of partition functions") {
  auto doc = grid_graph(2, 4);
  MonomerSet m1{{0, 1}};
  MonomerSet m2{{4, 7}};
  CHECK(loop_gas_Z2(doc.graph, doc.weights, m1, m2) ==
        partition_function(doc.graph, doc.weights, m1) * partition_function(doc.graph, doc.weights, m2));
}

}  // TEST_SUITE
