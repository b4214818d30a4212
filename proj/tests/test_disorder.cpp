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

#include "doctest.h"
#include "dimerlab/disorder.hpp"
#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/suites.hpp"
#include "support.hpp"

using namespace dimerlab;
using dimerlab::testing::pt;

namespace {

Point half(long x2, long y2) { return pt(x2, 2, y2, 2); }

// Points in quarter units.
Point quarter(long x4, long y4) { return pt(x4, 4, y4, 4); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kPrecondition;
}

// Oracle for mu correlators: signed sum over matchings of the depleted graph.
Scalar mu_by_signed_sum(const PlanarGraph& g, const WeightMap& w, const std::vector<CanonicalPair>& pairs) {
  std::vector<std::size_t> crossings(g.edge_count(), 0);
  MonomerSet sites;
  for (const auto& p : pairs) {
    sites.sites.push_back(p.site);
    auto c = crossing_counts(g, p.line);
    for (EdgeId e = 0; e < g.edge_count(); ++e) crossings[e] += c[e];
  }
  Scalar total(0);
  for_each_matching(g, sites, [&](const Matching& m) {
    std::size_t k = 0;
    for (EdgeId e : m.edges) k += crossings[e];
    const Scalar chi = weight_of(w, m.edges);
    total += k % 2 ? -chi : chi;
    return true;
  });
  return total / partition_function(g, w);
}

PairFixture shipped(const std::string& name) { return read_pair_fixture(default_data_dir() + "/" + name + ".json"); }

}  // namespace

TEST_SUITE("disorder") {

TEST_CASE("crossed edges") {
  auto doc = grid_graph(4, 4);
  const auto& g = doc.graph;
  DisorderLine l{{half(1, 1), half(3, 1)}};
  auto star = l_star(g, l);
  REQUIRE(star.size() == 1);
  const Edge& e = g.edge(star[0]);
  CHECK(((e.u == 1 && e.v == 5) || (e.u == 5 && e.v == 1)));
  DisorderLine refined{{half(1, 1), quarter(3, 2), quarter(5, 2), half(3, 1)}};
  CHECK(l_star(g, refined) == star);
  DisorderLine back_and_forth{{half(1, 1), half(3, 1), quarter(2, 3)}};
  CHECK(l_star(g, back_and_forth).empty());
  CHECK(crossing_counts(g, back_and_forth)[star[0]] == 2);
  auto [near, far] = endpoint_faces(g, l);
  CHECK(near != far);
  DisorderLine single{{half(3, 3)}};
  CHECK(l_star(g, single).empty());
  CHECK(disorder_expectation(g, doc.weights, {single}) == Scalar(1));
}

TEST_CASE("closed loops give the parity of the enclosed vertices") {
  auto doc = grid_graph(4, 4);
  DisorderLine one{{half(1, 1), half(3, 1), half(3, 3), half(1, 3), half(1, 1)}};
  CHECK(disorder_expectation(doc.graph, doc.weights, {one}) == Scalar(-1));
  DisorderLine two{{half(1, 1), half(5, 1), half(5, 3), half(1, 3), half(1, 1)}};
  CHECK(disorder_expectation(doc.graph, doc.weights, {two}) == Scalar(1));
  auto h = homotopy_check(doc.graph, doc.weights, one, DisorderLine{{half(1, 1)}});
  CHECK(h.swept == 1);
  CHECK(h.equal);
}

TEST_CASE("Pfaffian path agrees with the signed sum") {
  std::mt19937_64 rng(8);
  for (std::uint64_t i = 0; i < 6; ++i) {
    auto doc = grid_graph(4, 4);
    doc.weights = dimerlab::testing::random_weights(doc.graph, rng, i % 2 == 1);
    if (partition_function(doc.graph, doc.weights).is_zero()) continue;
    DisorderLine a{{half(1, 1), half(3, 1), half(3, 3), half(5, 3)}};
    DisorderLine b{{half(5, 5), half(3, 5), half(1, 5)}};
    CHECK(disorder_expectation(doc.graph, doc.weights, {a, b}) ==
          disorder_expectation_signed_sum(doc.graph, doc.weights, {a, b}));
  }
}

TEST_CASE("homotopy sign per swept site") {
  auto doc = grid_graph(4, 6);
  DisorderLine straight{{half(1, 3), half(9, 3)}};
  DisorderLine over{{half(1, 3), half(3, 3), half(3, 5), half(7, 5), half(7, 3), half(9, 3)}};
  auto swept = swept_vertices(doc.graph, straight, over);
  CHECK(swept.size() == 2);
  auto h = homotopy_check(doc.graph, doc.weights, straight, over);
  CHECK(h.equal);
  CHECK(h.deformed == h.original);
  DisorderLine other_end{{half(1, 3), half(11, 3)}};
  CHECK(code_of([&] { swept_vertices(doc.graph, straight, other_end); }) == ErrorCode::kPrecondition);
}

TEST_CASE("mu correlators match the signed-sum oracle") {
  for (const char* name : {"thm2_grid4x4_corners", "thm2_grid4x4_pair", "thm2_grid4x6_mixed"}) {
    auto f = shipped(name);
    CHECK(mu_correlator(f.document.graph, f.document.weights, f.pairs) ==
          mu_by_signed_sum(f.document.graph, f.document.weights, f.pairs));
  }
}

TEST_CASE("cyclic order ignores input order") {
  auto f = shipped("thm2_grid4x6_bulk");
  auto sorted = cyclic_order(f.document.graph, f.pairs);
  auto reversed = f.pairs;
  std::reverse(reversed.begin(), reversed.end());
  auto again = cyclic_order(f.document.graph, reversed);
  REQUIRE(again.size() == sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(again[i].site == sorted[i].site);
  for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i].site == f.pairs[i].site);
}

TEST_CASE("errors") {
  auto doc = grid_graph(4, 4);
  const auto& g = doc.graph;
  CHECK(code_of([&] { validate_line(g, DisorderLine{}); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { validate_line(g, DisorderLine{{pt(1, 1)}}); }) == ErrorCode::kDegenerateCrossing);
  CHECK(code_of([&] { validate_line(g, DisorderLine{{half(1, 2)}}); }) == ErrorCode::kDegenerateCrossing);
  CHECK(code_of([&] { validate_line(g, DisorderLine{{half(1, 1), half(5, 5)}}); }) ==
        ErrorCode::kDegenerateCrossing);
  auto f = shipped("thm2_grid4x4_corners");
  auto doubled = f.pairs;
  doubled[1].site = doubled[0].site;
  CHECK(code_of([&] { validate_canonical(f.document.graph, doubled); }) == ErrorCode::kNonCanonical);
  auto odd = f.pairs;
  odd.pop_back();
  CHECK(code_of([&] { mu_correlator(f.document.graph, f.document.weights, odd); }) == ErrorCode::kPrecondition);
}

}  // TEST_SUITE
