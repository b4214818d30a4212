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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dimerlab/disorder.hpp"
#include "dimerlab/graph_io.hpp"

namespace dimerlab {

// rows x cols grid; vertex r * cols + c sits at (c, r). Horizontal edges are
// numbered first, row by row, then vertical ones. Throws kInvalidSize.
GraphDocument grid_graph(std::size_t rows, std::size_t cols, const Scalar& weight = Scalar(1));

struct RandomFixtureOptions {
  std::size_t min_vertices = 4;
  std::size_t max_vertices = 16;
  double deletion_probability = 0.3;
  double complex_probability = 0.2;  // chance of complex weights on a fixture
  int coordinate_range = 24;         // points drawn from {0..range}^2 / 2
};

// Connected straight-line planar graph on an even number of random points:
// greedy shortest-first triangulation, then random edge deletions that keep
// the graph connected. Weights are nonzero rationals p/q with |p|, q <= 9.
// Redraws until Z != 0. Deterministic in the engine state.
GraphDocument random_planar_fixture(std::mt19937_64& rng, const RandomFixtureOptions& options = {});

// Engine for fixture `index` of a run with `seed`; independent of the order in
// which fixtures are generated.
std::mt19937_64 fixture_engine(std::uint64_t seed, std::uint64_t index);

// Disorder section of a graph file:
//   "disorder": {"lines": [{"site": 3, "points": [["1/2", "3/2"], ...]}, ...]}
// "site" is a vertex id and is only needed for order-disorder pairs.
std::vector<DisorderLine> parse_disorder_lines(const std::string& text);
std::vector<CanonicalPair> parse_canonical_pairs(const PlanarGraph& graph, const std::string& text);
std::string serialize_with_pairs(const PlanarGraph& graph, const WeightMap& weights,
                                 const std::vector<CanonicalPair>& pairs);

struct PairFixture {
  std::string name;
  GraphDocument document;
  std::vector<CanonicalPair> pairs;
};

PairFixture read_pair_fixture(const std::string& path);

}  // namespace dimerlab
