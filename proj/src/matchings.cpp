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

#include "dimerlab/matchings.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {

bool EnumerationOptions::force_large_from_environment() {
  const char* value = std::getenv("DIMERLAB_FORCE_LARGE");
  return value != nullptr && std::string(value) == "1";
}

void check_enumeration_size(const PlanarGraph& graph, const EnumerationOptions& options) {
  if (graph.vertex_count() > kEnumerationVertexLimit && !options.force_large) {
    throw Error(ErrorCode::kSizeGuard,
                std::to_string(graph.vertex_count()) + " vertices exceed the enumeration limit of " +
                    std::to_string(kEnumerationVertexLimit) + " (set DIMERLAB_FORCE_LARGE=1)");
  }
}

Scalar weight_of(const WeightMap& weights, const std::vector<EdgeId>& edges) {
  Scalar product(1);
  for (EdgeId e : edges) product *= weights[e];
  return product;
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const PlanarGraph& graph, const MonomerSet& removed,
                 const std::function<bool(const Matching&)>& visit)
      : graph_(graph), visit_(visit), covered_(graph.vertex_count(), false) {
    current_.depleted_by = removed;
    for (VertexId v : removed.sites) covered_[v] = true;
  }

  void run() {
    const std::size_t free = std::count(covered_.begin(), covered_.end(), false);
    if (free % 2 != 0) return;
    recurse(0);
  }

 private:
  bool has_free_edge(VertexId v) const {
    for (EdgeId e : graph_.rotation(v)) {
      if (!covered_[graph_.other_end(e, v)]) return true;
    }
    return false;
  }

  bool neighbours_still_matchable(VertexId v) const {
    for (EdgeId e : graph_.rotation(v)) {
      const VertexId w = graph_.other_end(e, v);
      if (!covered_[w] && !has_free_edge(w)) return false;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool recurse(VertexId from) {
    VertexId v = from;
    while (v < covered_.size() && covered_[v]) ++v;
    if (v == covered_.size()) {
      Matching m = current_;
      std::sort(m.edges.begin(), m.edges.end());
      return visit_(m);
    }
    for (EdgeId e : graph_.rotation(v)) {
      const VertexId w = graph_.other_end(e, v);
      if (covered_[w]) continue;
      covered_[v] = covered_[w] = true;
      current_.edges.push_back(e);
      bool keep_going = true;
      if (neighbours_still_matchable(v) && neighbours_still_matchable(w)) keep_going = recurse(v + 1);
      current_.edges.pop_back();
      covered_[v] = covered_[w] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  const PlanarGraph& graph_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<bool> covered_;
  Matching current_;
};

}  // namespace

void for_each_matching(const PlanarGraph& graph, const MonomerSet& removed,
                       const std::function<bool(const Matching&)>& visit,
                       const EnumerationOptions& options) {
  check_enumeration_size(graph, options);
  validate_monomers(graph, removed);
  MatchingSearch(graph, removed, visit).run();
}

std::vector<Matching> enumerate_matchings(const PlanarGraph& graph, const MonomerSet& removed,
                                          const EnumerationOptions& options) {
  std::vector<Matching> all;
  for_each_matching(
      graph, removed,
      [&](const Matching& m) {
        all.push_back(m);
        return true;
      },
      options);
  return all;
}

Scalar partition_function(const PlanarGraph& graph, const WeightMap& weights,
                          const MonomerSet& removed, const EnumerationOptions& options) {
  Scalar z(0);
  for_each_matching(
      graph, removed,
      [&](const Matching& m) {
        z += weight_of(weights, m.edges);
        return true;
      },
      options);
  return z;
}

Scalar monomer_correlation(const PlanarGraph& graph, const WeightMap& weights,
                           const MonomerSet& sites, const EnumerationOptions& options) {
  const Scalar z = partition_function(graph, weights, {}, options);
  if (z.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  if (sites.empty()) return Scalar(1);
  return partition_function(graph, weights, sites, options) / z;
}

PartitionTable::PartitionTable(const PlanarGraph& graph, WeightMap weights,
                               const EnumerationOptions& options)
    : graph_(&graph), weights_(std::move(weights)), neighbors_(graph.vertex_count()) {
  check_enumeration_size(graph, options);
  if (graph.vertex_count() > 64) {
    throw Error(ErrorCode::kSizeGuard, "partition tables hold at most 64 vertices");
  }
  full_mask_ = graph.vertex_count() == 64 ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << graph.vertex_count()) - 1);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (EdgeId e : graph.rotation(v)) neighbors_[v].emplace_back(graph.other_end(e, v), e);
  }
}

std::uint64_t PartitionTable::mask_of(const MonomerSet& m) const {
  validate_monomers(*graph_, m);
  std::uint64_t mask = 0;
  for (VertexId v : m.sites) mask |= std::uint64_t{1} << v;
  return mask;
}

const Scalar& PartitionTable::z_of_mask(std::uint64_t uncovered) {
  static const Scalar kOne(1);
  static const Scalar kZero(0);
  if (uncovered == 0) return kOne;
  if (std::popcount(uncovered) % 2 != 0) return kZero;
  auto it = memo_.find(uncovered);
  if (it != memo_.end()) return it->second;
  const VertexId v = static_cast<VertexId>(std::countr_zero(uncovered));
  Scalar sum(0);
  for (const auto& [w, e] : neighbors_[v]) {
    const std::uint64_t bit = std::uint64_t{1} << w;
    if (!(uncovered & bit)) continue;
    const Scalar& rest = z_of_mask(uncovered & ~bit & ~(std::uint64_t{1} << v));
    if (!rest.is_zero()) sum += weights_[e] * rest;
  }
  return memo_.emplace(uncovered, std::move(sum)).first->second;
}

Scalar PartitionTable::z(const MonomerSet& removed) { return z_removed(mask_of(removed)); }

Scalar PartitionTable::correlation(const MonomerSet& sites) {
  const Scalar& z0 = z_of_mask(full_mask_);
  if (z0.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  return z(sites) / z0;
}

}  // namespace dimerlab
