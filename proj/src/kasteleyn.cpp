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

#include "dimerlab/kasteleyn.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

bool traversal_is_clockwise(const DirectedEdge& d, const Orientation& orientation) {
  return orientation.forward[d.edge] != d.forward;
}

// Every component of the uncovered subgraph must have even size.
bool uncovered_components_even(const PlanarGraph& graph, const std::vector<bool>& covered) {
  std::vector<bool> seen(covered);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < graph.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      ++size;
      for (EdgeId e : graph.rotation(v)) {
        const VertexId w = graph.other_end(e, v);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    if (size % 2 != 0) return false;
  }
  return true;
}

bool extend_matching(const PlanarGraph& graph, std::vector<bool>& covered, std::vector<EdgeId>& chosen) {
  VertexId v = 0;
  while (v < covered.size() && covered[v]) ++v;
  if (v == covered.size()) return true;
  for (EdgeId e : graph.rotation(v)) {
    const VertexId w = graph.other_end(e, v);
    if (covered[w]) continue;
    covered[v] = covered[w] = true;
    chosen.push_back(e);
    if (uncovered_components_even(graph, covered) && extend_matching(graph, covered, chosen)) return true;
    chosen.pop_back();
    covered[v] = covered[w] = false;
  }
  return false;
}

Scalar connected_partition_function(const PlanarGraph& graph, const WeightMap& weights) {
  const Orientation orientation = fkt_orientation(graph);
  const Scalar pf = pfaffian(kasteleyn_matrix(graph, weights, orientation));
  if (pf.is_zero()) return pf;
  auto matching = find_perfect_matching(graph);
  if (!matching) {
    throw Error(ErrorCode::kSignUndetermined, "nonzero Pfaffian on a graph without perfect matching");
  }
  return pfaffian_term_sign(graph, orientation, *matching) > 0 ? pf : -pf;
}

}  // namespace

std::vector<std::size_t> clockwise_counts(const PlanarGraph& graph, const Orientation& orientation) {
  std::vector<std::size_t> counts;
  for (const Face& f : graph.faces()) {
    counts.push_back(std::count_if(f.boundary.begin(), f.boundary.end(), [&](const DirectedEdge& d) {
      return traversal_is_clockwise(d, orientation);
    }));
  }
  return counts;
}

std::vector<FaceId> inadmissible_faces(const PlanarGraph& graph, const Orientation& orientation) {
  std::vector<FaceId> bad;
  const auto counts = clockwise_counts(graph, orientation);
  for (const Face& f : graph.faces()) {
    if (!f.is_outer && counts[f.id] % 2 == 0) bad.push_back(f.id);
  }
  return bad;
}

Orientation fkt_orientation(const PlanarGraph& graph) {
  if (graph.vertex_count() == 0 || !graph.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "Kasteleyn orientation requires a connected graph");
  }
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  Orientation orientation{std::vector<bool>(m, true)};
  std::vector<bool> in_tree(m, false);
  std::vector<bool> reached(n, false);
  std::deque<VertexId> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : graph.rotation(v)) {
      const VertexId w = graph.other_end(e, v);
      if (reached[w]) continue;
      reached[w] = true;
      in_tree[e] = true;
      orientation.forward[e] = graph.edge(e).u == v;
      queue.push_back(w);
    }
  }

  // The remaining edges form a spanning tree of the dual rooted at the outer face.
  const std::size_t face_count = graph.faces().size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(face_count, kNone);
  std::vector<bool> face_reached(face_count, false);
  std::vector<FaceId> order;
  const FaceId root = graph.outer_face();
  std::deque<FaceId> face_queue{root};
  face_reached[root] = true;
  while (!face_queue.empty()) {
    const FaceId f = face_queue.front();
    face_queue.pop_front();
    order.push_back(f);
    for (const DirectedEdge& d : graph.face(f).boundary) {
      if (in_tree[d.edge]) continue;
      const FaceId g = graph.face_of({d.edge, !d.forward});
      if (face_reached[g]) continue;
      face_reached[g] = true;
      parent_edge[g] = d.edge;
      face_queue.push_back(g);
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const FaceId f = *it;
    if (f == root) continue;
    const EdgeId pending = parent_edge[f];
    std::size_t clockwise = 0;
    bool pending_forward = true;
    for (const DirectedEdge& d : graph.face(f).boundary) {
      if (d.edge == pending) {
        pending_forward = d.forward;
        continue;
      }
      if (traversal_is_clockwise(d, orientation)) ++clockwise;
    }
    // Clockwise along this face means against the walk direction.
    orientation.forward[pending] = clockwise % 2 == 0 ? !pending_forward : pending_forward;
  }
  return orientation;
}

SkewMatrix kasteleyn_matrix(const PlanarGraph& graph, const WeightMap& weights,
                            const Orientation& orientation) {
  SkewMatrix a(graph.vertex_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    if (orientation.forward[e]) {
      a.set(edge.u, edge.v, weights[e]);
    } else {
      a.set(edge.v, edge.u, weights[e]);
    }
  }
  return a;
}

int pfaffian_term_sign(const PlanarGraph& graph, const Orientation& orientation,
                       const std::vector<EdgeId>& matching) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  int sign = 1;
  for (EdgeId e : matching) {
    const Edge& edge = graph.edge(e);
    const VertexId lo = std::min(edge.u, edge.v);
    const VertexId hi = std::max(edge.u, edge.v);
    const bool lo_to_hi = orientation.forward[e] == (edge.u == lo);
    if (!lo_to_hi) sign = -sign;
    pairs.emplace_back(lo, hi);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<VertexId> permutation;
  for (const auto& [lo, hi] : pairs) {
    permutation.push_back(lo);
    permutation.push_back(hi);
  }
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    for (std::size_t j = i + 1; j < permutation.size(); ++j) {
      if (permutation[i] > permutation[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? sign : -sign;
}

std::optional<std::vector<EdgeId>> find_perfect_matching(const PlanarGraph& graph) {
  if (graph.vertex_count() % 2 != 0) return std::nullopt;
  std::vector<bool> covered(graph.vertex_count(), false);
  std::vector<EdgeId> chosen;
  if (!uncovered_components_even(graph, covered)) return std::nullopt;
  if (!extend_matching(graph, covered, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Scalar fast_partition_function(const PlanarGraph& graph, const WeightMap& weights) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return Scalar(1);
  if (n % 2 != 0) return Scalar(0);
  if (graph.is_connected()) return connected_partition_function(graph, weights);
  const auto component = graph.component_labels();
  const std::size_t count = *std::max_element(component.begin(), component.end()) + 1;
  Scalar product(1);
  for (std::size_t c = 0; c < count; ++c) {
    MonomerSet others;
    for (VertexId v = 0; v < n; ++v) {
      if (component[v] != c) others.sites.push_back(v);
    }
    const PlanarGraph sub = deplete(graph, others);
    product *= fast_partition_function(sub, restrict_weights(graph, weights, sub));
    if (product.is_zero()) break;
  }
  return product;
}

EdgeFlipSet edge_boundary(const PlanarGraph& graph, const std::vector<VertexId>& b) {
  std::vector<bool> inside(graph.vertex_count(), false);
  for (VertexId v : b) {
    if (v >= graph.vertex_count()) {
      throw Error(ErrorCode::kUnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    }
    inside[v] = true;
  }
  EdgeFlipSet boundary;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (inside[graph.edge(e).u] != inside[graph.edge(e).v]) boundary.push_back(e);
  }
  return boundary;
}

WeightMap gauge_flip(const PlanarGraph& graph, const WeightMap& weights, const std::vector<VertexId>& b) {
  return edge_flip(graph, weights, edge_boundary(graph, b));
}

WeightMap edge_flip(const PlanarGraph& graph, const WeightMap& weights, const EdgeFlipSet& e) {
  WeightMap flipped = weights;
  for (EdgeId id : e) {
    if (id >= graph.edge_count()) {
      throw Error(ErrorCode::kUnknownEdge, "edge index " + std::to_string(id) + " out of range");
    }
    flipped[id] = -flipped[id];
  }
  return flipped;
}

GaugeReport verify_gauge(const PlanarGraph& graph, const WeightMap& weights, const std::vector<VertexId>& b) {
  GaugeReport report;
  report.flipped = partition_function(graph, gauge_flip(graph, weights, b));
  report.expected = sign_power(static_cast<long>(b.size())) * partition_function(graph, weights);
  report.equal = report.flipped == report.expected;
  return report;
}

}  // namespace dimerlab
