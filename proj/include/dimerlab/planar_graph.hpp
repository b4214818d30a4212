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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dimerlab/geometry.hpp"

namespace dimerlab {

// Dense indices into a graph's vertex / edge / face arrays. External
// identifiers (the ids found in graph files) are kept as labels.
using VertexId = std::size_t;
using EdgeId = std::size_t;
using FaceId = std::size_t;
using Label = std::int64_t;

struct VertexSpec {
  Label label;
  Point position;
};

struct EdgeSpec {
  Label label;
  Label u;  // vertex labels
  Label v;
};

struct Vertex {
  Label label;
  Point position;
};

struct Edge {
  Label label;
  VertexId u;
  VertexId v;
};

// One traversal direction of an edge: u -> v when forward, v -> u otherwise.
struct DirectedEdge {
  EdgeId edge;
  bool forward;

  friend bool operator==(const DirectedEdge& a, const DirectedEdge& b) {
    return a.edge == b.edge && a.forward == b.forward;
  }
};

struct Face {
  FaceId id;
  std::vector<DirectedEdge> boundary;  // cyclic; face lies to the left
  bool is_outer;
};

// An ordered list of distinct vertices of some host graph.
struct MonomerSet {
  std::vector<VertexId> sites;

  bool empty() const { return sites.empty(); }
  std::size_t size() const { return sites.size(); }
  bool contains(VertexId v) const;
};

// Simple planar graph with a straight-line embedding at exact rational
// coordinates. The rotation system and the faces are derived from geometry
// at construction; the object is immutable afterwards.
class PlanarGraph {
 public:
  // Throws kDuplicateCoordinate, kNonSimple, kEdgeCrossing, kUnknownVertex,
  // or kParseError (duplicate labels).
  static PlanarGraph build(const std::vector<VertexSpec>& vertices,
                           const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(VertexId v) const { return vertices_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexId other_end(EdgeId e, VertexId v) const;
  VertexId tail(const DirectedEdge& d) const;
  VertexId head(const DirectedEdge& d) const;

  // Counterclockwise order of incident edges around v.
  const std::vector<EdgeId>& rotation(VertexId v) const { return rotation_[v]; }
  std::size_t degree(VertexId v) const { return rotation_[v].size(); }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  VertexId vertex_by_label(Label label) const;  // kUnknownVertex
  EdgeId edge_by_label(Label label) const;      // kUnknownEdge

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  FaceId face_of(const DirectedEdge& d) const;
  // The face on the left of the forward traversal / the backward traversal.
  FaceId left_face(EdgeId e) const { return face_of({e, true}); }
  FaceId right_face(EdgeId e) const { return face_of({e, false}); }

  // The unbounded face. Requires a connected graph with at least one vertex.
  FaceId outer_face() const;

  bool is_connected() const;
  // Component index per vertex; components numbered by smallest vertex.
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;

 private:
  PlanarGraph() = default;
  void derive_structure();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> rotation_;
  // Position of edge e in the rotation of its u (index 0) and v (index 1) ends.
  std::vector<std::array<std::size_t, 2>> rotation_slot_;
  std::vector<Face> faces_;
  std::vector<FaceId> dart_face_;  // index 2e (forward) / 2e+1 (backward)
  std::unordered_map<Label, VertexId> vertex_label_index_;
  std::unordered_map<Label, EdgeId> edge_label_index_;

  friend PlanarGraph deplete(const PlanarGraph& graph, const MonomerSet& removed);
};

PlanarGraph build_graph(const std::vector<VertexSpec>& vertices,
                        const std::vector<EdgeSpec>& edges);

// Orbits of the next-edge map of the rotation system, one per face boundary
// walk. Bounded faces are traversed counterclockwise.
std::vector<Face> faces(const PlanarGraph& graph);

// Vertices of the outer face walk in counterclockwise order, starting at the
// smallest vertex on it; a vertex visited several times appears once, at its
// first visit. Throws kDisconnected.
std::vector<VertexId> outer_boundary_order(const PlanarGraph& graph);

// Induced subgraph on the complement of `removed`; labels and coordinates are
// kept, indices are renumbered in increasing order. Throws kUnknownVertex.
PlanarGraph deplete(const PlanarGraph& graph, const MonomerSet& removed);

// Face containing a point. Throws kDegenerateCrossing when the point lies on
// a vertex or an edge.
FaceId locate_face(const PlanarGraph& graph, const Point& p);

// Vertices on the boundary walk of a face, first visit order.
std::vector<VertexId> face_vertices(const PlanarGraph& graph, FaceId f);

// Throws kUnknownVertex for out-of-range ids and kPrecondition for duplicates.
void validate_monomers(const PlanarGraph& graph, const MonomerSet& m);

}  // namespace dimerlab
