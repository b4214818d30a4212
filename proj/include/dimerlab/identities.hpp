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

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimerlab/disorder.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/pfaffian.hpp"

namespace dimerlab {

// A pairing of {0..2n-1} in canonical form: pairs sorted by first element,
// first < second in each pair. sign is the parity of the permutation
// (a1 b1 a2 b2 ...).
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  int sign;
};

void for_each_pairing(std::size_t size, const std::function<void(const Pairing&)>& visit);

// sum over pairings of sgn(pi) prod A_{pi(2j-1) pi(2j)}. Throws kOddDimension.
Scalar pfaffian_over_pairings(const SkewMatrix& two_point);

struct CorrelationReport {
  Scalar lhs;
  Scalar rhs;
  bool equal;
  std::string configuration;
};

// Entry (i, j), i < j, is S_2(x_i, x_j); entry (j, i) its negative.
SkewMatrix two_point_matrix(PartitionTable& table, const std::vector<VertexId>& sites);

// sum_{k=2}^{2n} (-1)^k S_2(x_1, x_k) S_{2n-2}(sites without x_1, x_k).
Scalar q_expansion(PartitionTable& table, const std::vector<VertexId>& sites);
Scalar q_expansion(const PlanarGraph& graph, const WeightMap& weights,
                   const std::vector<VertexId>& sites);

// Sites are put in outer-boundary cyclic order starting from the first one
// given, then S_2n is compared with Pf(S_2). Throws kNotOnBoundary,
// kZeroPartitionFunction.
CorrelationReport verify_theorem1(PartitionTable& table, const std::vector<VertexId>& sites);
CorrelationReport verify_theorem1(const PlanarGraph& graph, const WeightMap& weights,
                                  const std::vector<VertexId>& sites);

// Caches mu correlators of subsets of a fixed list of canonical pairs.
class MuCorrelatorCache {
 public:
  MuCorrelatorCache(const PlanarGraph& graph, const WeightMap& weights,
                    std::vector<CanonicalPair> pairs);

  const std::vector<CanonicalPair>& pairs() const { return pairs_; }
  // Subset given by 0-based indices into pairs().
  Scalar correlator(const std::vector<std::size_t>& subset);

 private:
  const PlanarGraph* graph_;
  WeightMap weights_;
  std::vector<CanonicalPair> pairs_;
  std::vector<std::vector<bool>> line_parity_;
  Scalar z_;
  std::unordered_map<std::uint64_t, Scalar> cache_;
};

// sum_{k=2}^{2n} (-1)^k <mu_1 mu_k> <prod_{j != 1,k} mu_j>, pairs taken in the
// order given. Throws kZeroPartitionFunction, kNonCanonical.
Scalar r_expansion(const PlanarGraph& graph, const WeightMap& weights,
                   const std::vector<CanonicalPair>& pairs);

// <prod mu_j> against Pf(<mu_j mu_k>), with pairs cyclically ordered first.
CorrelationReport verify_theorem2(const PlanarGraph& graph, const WeightMap& weights,
                                  const std::vector<CanonicalPair>& pairs);

// sum over loop/path configurations Gamma of 2^{n_s} prod chi(gamma), with
// configurations obtained by grouping the enumerated double covers.
Scalar loop_gas_Z2(const PlanarGraph& graph, const WeightMap& weights, const MonomerSet& m1,
                   const MonomerSet& m2, const EnumerationOptions& options = {});

// A simple path given by its vertex sequence.
struct SimplePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Calls visit for every simple path from `from` to `to` whose interior avoids
// `blocked` (a vertex mask).
void for_each_simple_path(const PlanarGraph& graph, VertexId from, VertexId to,
                          std::uint64_t blocked, const std::function<void(const SimplePath&)>& visit);

// sum over odd simple paths gamma : x1 -> x2 of chi(gamma) (Z(V(gamma))/Z)^2.
Scalar two_point_path_representation(PartitionTable& table, VertexId x1, VertexId x2);
Scalar two_point_path_representation(const PlanarGraph& graph, const WeightMap& weights,
                                     VertexId x1, VertexId x2);

// sum over collections of vertex-disjoint odd simple paths with boundary
// `sites` of (Z(V(Gamma_P))/Z)^2 prod chi(gamma).
Scalar correlation_path_representation(PartitionTable& table, const MonomerSet& sites);
Scalar correlation_path_representation(const PlanarGraph& graph, const WeightMap& weights,
                                       const MonomerSet& sites);

}  // namespace dimerlab
