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

#include "dimerlab/identities.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

void pairings_from(std::vector<std::size_t>& remaining, Pairing& current,
                   const std::function<void(const Pairing&)>& visit) {
  if (remaining.empty()) {
    visit(current);
    return;
  }
  const std::size_t first = remaining.front();
  for (std::size_t pos = 1; pos < remaining.size(); ++pos) {
    const std::size_t partner = remaining[pos];
    std::vector<std::size_t> rest;
    for (std::size_t q = 1; q < remaining.size(); ++q) {
      if (q != pos) rest.push_back(remaining[q]);
    }
    const int saved = current.sign;
    if (pos % 2 == 0) current.sign = -current.sign;
    current.pairs.emplace_back(first, partner);
    pairings_from(rest, current, visit);
    current.pairs.pop_back();
    current.sign = saved;
  }
}

std::string describe_sites(const PlanarGraph& graph, const std::vector<VertexId>& sites) {
  std::string out = "sites=";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(graph.vertex(sites[i]).label);
  }
  return out;
}

std::vector<VertexId> without(const std::vector<VertexId>& sites, std::size_t a, std::size_t b) {
  std::vector<VertexId> rest;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i != a && i != b) rest.push_back(sites[i]);
  }
  return rest;
}

void require_mask_size(const PlanarGraph& graph) {
  if (graph.vertex_count() > 64) throw Error(ErrorCode::kSizeGuard, "path search holds at most 64 vertices");
}

// Vertex-disjoint odd paths pairing up all of `open` (a mask of sites).
void path_collections(PartitionTable& table, std::uint64_t open, std::uint64_t all_sites, std::uint64_t used,
                      const Scalar& chi, const Scalar& z, Scalar& total) {
  if (open == 0) {
    const Scalar ratio = table.z_removed(used) / z;
    total += chi * ratio * ratio;
    return;
  }
  const VertexId s = static_cast<VertexId>(std::countr_zero(open));
  const std::uint64_t rest = open & ~(std::uint64_t{1} << s);
  for (std::uint64_t targets = rest; targets != 0; targets &= targets - 1) {
    const VertexId t = static_cast<VertexId>(std::countr_zero(targets));
    const std::uint64_t blocked = used | all_sites;
    for_each_simple_path(table.graph(), s, t, blocked, [&](const SimplePath& gamma) {
      if (gamma.edges.size() % 2 == 0) return;
      std::uint64_t covered = used;
      for (VertexId v : gamma.vertices) covered |= std::uint64_t{1} << v;
      path_collections(table, rest & ~(std::uint64_t{1} << t), all_sites, covered,
                       chi * weight_of(table.weights(), gamma.edges), z, total);
    });
  }
}

}  // namespace

void for_each_pairing(std::size_t size, const std::function<void(const Pairing&)>& visit) {
  if (size % 2 != 0) throw Error(ErrorCode::kOddDimension, "cannot pair an odd number of elements");
  std::vector<std::size_t> all(size);
  for (std::size_t i = 0; i < size; ++i) all[i] = i;
  Pairing current{{}, 1};
  pairings_from(all, current, visit);
}

Scalar pfaffian_over_pairings(const SkewMatrix& two_point) {
  Scalar total(0);
  for_each_pairing(two_point.dimension(), [&](const Pairing& pi) {
    Scalar term(pi.sign);
    for (const auto& [a, b] : pi.pairs) {
      term *= two_point.at(a, b);
      if (term.is_zero()) return;
    }
    total += term;
  });
  return total;
}

SkewMatrix two_point_matrix(PartitionTable& table, const std::vector<VertexId>& sites) {
  SkewMatrix s(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      s.set(i, j, table.correlation({{sites[i], sites[j]}}));
    }
  }
  return s;
}

Scalar q_expansion(PartitionTable& table, const std::vector<VertexId>& sites) {
  if (sites.size() % 2 != 0) throw Error(ErrorCode::kOddDimension, "odd number of sites");
  if (sites.empty()) return Scalar(1);
  Scalar total(0);
  for (std::size_t k = 1; k < sites.size(); ++k) {
    Scalar term = table.correlation({{sites[0], sites[k]}});
    if (term.is_zero()) continue;
    term *= table.correlation({without(sites, 0, k)});
    // 1-based label k + 1.
    if (k % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Scalar q_expansion(const PlanarGraph& graph, const WeightMap& weights, const std::vector<VertexId>& sites) {
  PartitionTable table(graph, weights);
  return q_expansion(table, sites);
}

CorrelationReport verify_theorem1(PartitionTable& table, const std::vector<VertexId>& sites) {
  const PlanarGraph& graph = table.graph();
  const std::vector<VertexId> boundary = outer_boundary_order(graph);
  std::vector<std::pair<std::size_t, VertexId>> placed;
  for (VertexId v : sites) {
    auto it = std::find(boundary.begin(), boundary.end(), v);
    if (it == boundary.end()) {
      throw Error(ErrorCode::kNotOnBoundary,
                  "site " + std::to_string(graph.vertex(v).label) + " is not on the outer boundary");
    }
    placed.emplace_back(static_cast<std::size_t>(it - boundary.begin()), v);
  }
  std::sort(placed.begin(), placed.end());
  std::vector<VertexId> ordered;
  for (const auto& entry : placed) ordered.push_back(entry.second);
  if (!sites.empty()) {
    std::rotate(ordered.begin(), std::find(ordered.begin(), ordered.end(), sites.front()), ordered.end());
  }
  CorrelationReport report;
  report.configuration = describe_sites(graph, ordered);
  report.lhs = table.correlation({ordered});
  report.rhs = pfaffian_over_pairings(two_point_matrix(table, ordered));
  report.equal = report.lhs == report.rhs;
  return report;
}

CorrelationReport verify_theorem1(const PlanarGraph& graph, const WeightMap& weights,
                                  const std::vector<VertexId>& sites) {
  PartitionTable table(graph, weights);
  return verify_theorem1(table, sites);
}

MuCorrelatorCache::MuCorrelatorCache(const PlanarGraph& graph, const WeightMap& weights,
                                     std::vector<CanonicalPair> pairs)
    : graph_(&graph), weights_(weights), pairs_(std::move(pairs)) {
  if (pairs_.size() > 64) throw Error(ErrorCode::kPrecondition, "too many order-disorder pairs");
  validate_canonical(graph, pairs_);
  for (const CanonicalPair& p : pairs_) line_parity_.push_back(flip_parity(graph, {p.line}));
  z_ = partition_function(graph, weights_);
  if (z_.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
}

Scalar MuCorrelatorCache::correlator(const std::vector<std::size_t>& subset) {
  if (subset.size() % 2 != 0) throw Error(ErrorCode::kPrecondition, "odd number of order-disorder pairs");
  std::uint64_t key = 0;
  for (std::size_t i : subset) key |= std::uint64_t{1} << i;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::vector<bool> parity(graph_->edge_count(), false);
  MonomerSet sites;
  for (std::size_t i : subset) {
    sites.sites.push_back(pairs_[i].site);
    for (EdgeId e = 0; e < parity.size(); ++e) {
      if (line_parity_[i][e]) parity[e] = !parity[e];
    }
  }
  Scalar value = partition_function(*graph_, apply_flips(weights_, parity), sites) / z_;
  cache_.emplace(key, value);
  return value;
}

Scalar r_expansion(const PlanarGraph& graph, const WeightMap& weights, const std::vector<CanonicalPair>& pairs) {
  if (pairs.size() % 2 != 0) throw Error(ErrorCode::kPrecondition, "odd number of order-disorder pairs");
  if (pairs.empty()) return Scalar(1);
  MuCorrelatorCache cache(graph, weights, pairs);
  Scalar total(0);
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    Scalar term = cache.correlator({0, k});
    if (term.is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < pairs.size(); ++j) {
      if (j != k) rest.push_back(j);
    }
    term *= cache.correlator(rest);
    if (k % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

CorrelationReport verify_theorem2(const PlanarGraph& graph, const WeightMap& weights,
                                  const std::vector<CanonicalPair>& pairs) {
  const std::vector<CanonicalPair> ordered = cyclic_order(graph, pairs);
  MuCorrelatorCache cache(graph, weights, ordered);
  std::vector<std::size_t> all(ordered.size());
  std::vector<VertexId> sites;
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = i;
    sites.push_back(ordered[i].site);
  }
  SkewMatrix two_point(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) two_point.set(i, j, cache.correlator({i, j}));
  }
  CorrelationReport report;
  report.configuration = describe_sites(graph, sites);
  report.lhs = cache.correlator(all);
  report.rhs = pfaffian_over_pairings(two_point);
  report.equal = report.lhs == report.rhs;
  return report;
}

Scalar loop_gas_Z2(const PlanarGraph& graph, const WeightMap& weights, const MonomerSet& m1,
                   const MonomerSet& m2, const EnumerationOptions& options) {
  // Gamma is identified by its edge multiset; every class is weighted once.
  std::map<std::vector<EdgeId>, Scalar> classes;
  for_each_double_cover(
      graph, m1, m2,
      [&](const DoubleCover& cover) {
        std::vector<EdgeId> key = cover.omega1.edges;
        key.insert(key.end(), cover.omega2.edges.begin(), cover.omega2.edges.end());
        std::sort(key.begin(), key.end());
        if (classes.count(key)) return;
        const LoopPathDecomposition d = overlay(graph, cover);
        Scalar weight(static_cast<long>(class_size(d)));
        weight *= weight_of(weights, key);
        classes.emplace(std::move(key), std::move(weight));
      },
      options);
  Scalar total(0);
  for (const auto& [key, weight] : classes) total += weight;
  return total;
}

void for_each_simple_path(const PlanarGraph& graph, VertexId from, VertexId to, std::uint64_t blocked,
                          const std::function<void(const SimplePath&)>& visit) {
  require_mask_size(graph);
  if (from >= graph.vertex_count() || to >= graph.vertex_count()) {
    throw Error(ErrorCode::kUnknownVertex, "path endpoint out of range");
  }
  if (from == to) return;
  SimplePath path{{from}, {}};
  std::uint64_t visited = std::uint64_t{1} << from;
  std::function<void(VertexId)> extend = [&](VertexId v) {
    for (EdgeId e : graph.rotation(v)) {
      const VertexId w = graph.other_end(e, v);
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (w == to) {
        path.vertices.push_back(w);
        path.edges.push_back(e);
        visit(path);
        path.vertices.pop_back();
        path.edges.pop_back();
        continue;
      }
      if ((visited | blocked) & bit) continue;
      visited |= bit;
      path.vertices.push_back(w);
      path.edges.push_back(e);
      extend(w);
      path.vertices.pop_back();
      path.edges.pop_back();
      visited &= ~bit;
    }
  };
  extend(from);
}

Scalar two_point_path_representation(PartitionTable& table, VertexId x1, VertexId x2) {
  return correlation_path_representation(table, {{x1, x2}});
}

Scalar two_point_path_representation(const PlanarGraph& graph, const WeightMap& weights, VertexId x1,
                                     VertexId x2) {
  PartitionTable table(graph, weights);
  return two_point_path_representation(table, x1, x2);
}

Scalar correlation_path_representation(PartitionTable& table, const MonomerSet& sites) {
  const Scalar z = table.z();
  if (z.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  if (sites.size() % 2 != 0) throw Error(ErrorCode::kPrecondition, "odd number of sites");
  const std::uint64_t mask = table.mask_of(sites);
  Scalar total(0);
  path_collections(table, mask, mask, 0, Scalar(1), z, total);
  return total;
}

Scalar correlation_path_representation(const PlanarGraph& graph, const WeightMap& weights,
                                       const MonomerSet& sites) {
  PartitionTable table(graph, weights);
  return correlation_path_representation(table, sites);
}

}  // namespace dimerlab
