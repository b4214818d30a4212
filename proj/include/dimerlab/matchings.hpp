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
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "dimerlab/planar_graph.hpp"
#include "dimerlab/weights.hpp"

namespace dimerlab {

// Enumeration refuses hosts above this many vertices unless forced.
inline constexpr std::size_t kEnumerationVertexLimit = 40;

struct EnumerationOptions {
  // Defaults to true when DIMERLAB_FORCE_LARGE=1 is set in the environment.
  bool force_large = force_large_from_environment();

  static bool force_large_from_environment();
};

// Throws kSizeGuard for hosts with more than kEnumerationVertexLimit vertices.
void check_enumeration_size(const PlanarGraph& graph, const EnumerationOptions& options = {});

// A perfect matching of the graph depleted by `depleted_by`.
struct Matching {
  std::vector<EdgeId> edges;  // sorted
  MonomerSet depleted_by;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges == b.edges; }
};

// chi_K(omega): product of the weights of the matching's edges.
Scalar weight_of(const WeightMap& weights, const std::vector<EdgeId>& edges);

// Streams every perfect matching of G \ M exactly once. Branching is over the
// incident edges of the smallest uncovered vertex, in rotation order; a branch
// is cut as soon as some uncovered vertex has no free incident edge. Returning
// false from the visitor stops the enumeration.
void for_each_matching(const PlanarGraph& graph, const MonomerSet& removed,
                       const std::function<bool(const Matching&)>& visit,
                       const EnumerationOptions& options = {});

std::vector<Matching> enumerate_matchings(const PlanarGraph& graph, const MonomerSet& removed,
                                          const EnumerationOptions& options = {});

// Z_{G,K}(M) as a fold over for_each_matching.
Scalar partition_function(const PlanarGraph& graph, const WeightMap& weights,
                          const MonomerSet& removed = {}, const EnumerationOptions& options = {});

// S_2n = Z(sites) / Z. Throws kZeroPartitionFunction.
Scalar monomer_correlation(const PlanarGraph& graph, const WeightMap& weights,
                           const MonomerSet& sites, const EnumerationOptions& options = {});

// Memoised version of the same branching recursion, keyed by the set of
// still-uncovered vertices. One table answers Z(M) for every M on a fixed
// (graph, K), which is what the correlation sweeps need. Hosts are limited to
// 64 vertices by the bitmask representation (and to the enumeration guard).
class PartitionTable {
 public:
  PartitionTable(const PlanarGraph& graph, WeightMap weights,
                 const EnumerationOptions& options = {});

  const PlanarGraph& graph() const { return *graph_; }
  const WeightMap& weights() const { return weights_; }

  std::uint64_t full_mask() const { return full_mask_; }
  std::uint64_t mask_of(const MonomerSet& m) const;

  // Sum of chi over perfect matchings of the subgraph induced on `uncovered`.
  const Scalar& z_of_mask(std::uint64_t uncovered);
  Scalar z(const MonomerSet& removed = {});
  // Z(V \ mask) for a set of removed vertices given as a mask.
  Scalar z_removed(std::uint64_t removed_mask) { return z_of_mask(full_mask_ & ~removed_mask); }
  Scalar correlation(const MonomerSet& sites);  // kZeroPartitionFunction

 private:
  const PlanarGraph* graph_;
  WeightMap weights_;
  std::uint64_t full_mask_ = 0;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> neighbors_;
  std::unordered_map<std::uint64_t, Scalar> memo_;
};

}  // namespace dimerlab
