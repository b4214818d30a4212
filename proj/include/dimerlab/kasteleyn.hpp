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

#include <optional>
#include <vector>

#include "dimerlab/matchings.hpp"
#include "dimerlab/pfaffian.hpp"
#include "dimerlab/planar_graph.hpp"
#include "dimerlab/weights.hpp"

namespace dimerlab {

// Per-edge direction: forward means u -> v.
struct Orientation {
  std::vector<bool> forward;
};

using EdgeFlipSet = std::vector<EdgeId>;  // sorted, distinct

// Number of clockwise traversals on the boundary walk of each face.
std::vector<std::size_t> clockwise_counts(const PlanarGraph& graph, const Orientation& orientation);

// Bounded faces whose walk has an even number of clockwise traversals.
std::vector<FaceId> inadmissible_faces(const PlanarGraph& graph, const Orientation& orientation);

// Spanning tree edges oriented away from the root, remaining edges fixed
// face by face from the leaves of the dual tree towards the outer face.
// Throws kDisconnected.
Orientation fkt_orientation(const PlanarGraph& graph);

// A_uv = K_uv if u -> v, -K_uv if v -> u, 0 without an edge.
SkewMatrix kasteleyn_matrix(const PlanarGraph& graph, const WeightMap& weights,
                            const Orientation& orientation);

// Sign sgn(pi) * prod(orientation signs) with which the matching's term appears
// in Pf(kasteleyn_matrix). Requires a perfect matching of the whole graph.
int pfaffian_term_sign(const PlanarGraph& graph, const Orientation& orientation,
                       const std::vector<EdgeId>& matching);

// Some perfect matching, found by depth-first search that stops at the first
// success; empty optional when none exists.
std::optional<std::vector<EdgeId>> find_perfect_matching(const PlanarGraph& graph);

// Z_{G,K} through the Pfaffian of a Kasteleyn matrix. The global sign is fixed
// by one explicit perfect matching. Disconnected graphs are handled as the
// product over components. Throws kSignUndetermined if Pf != 0 although no
// perfect matching exists.
Scalar fast_partition_function(const PlanarGraph& graph, const WeightMap& weights);

// T_{dB} K: flips the sign on edges with exactly one endpoint in B.
WeightMap gauge_flip(const PlanarGraph& graph, const WeightMap& weights,
                     const std::vector<VertexId>& b);
// T_E K. Throws kUnknownEdge.
WeightMap edge_flip(const PlanarGraph& graph, const WeightMap& weights, const EdgeFlipSet& e);
// Edge boundary dB.
EdgeFlipSet edge_boundary(const PlanarGraph& graph, const std::vector<VertexId>& b);

struct GaugeReport {
  Scalar flipped;   // Z_{T_dB K}
  Scalar expected;  // (-1)^|B| Z_K
  bool equal;
};

GaugeReport verify_gauge(const PlanarGraph& graph, const WeightMap& weights,
                         const std::vector<VertexId>& b);

}  // namespace dimerlab
