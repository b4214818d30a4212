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

#include "dimerlab/planar_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

std::string describe(const Point& p) {
  return "(" + rational_to_string(p.x) + ", " + rational_to_string(p.y) + ")";
}

struct Box {
  Rational min_x, max_x, min_y, max_y;
};

Box box_of(const Point& a, const Point& b) {
  return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

bool boxes_meet(const Box& a, const Box& b) {
  return a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y;
}

std::size_t dart_index(const DirectedEdge& d) { return 2 * d.edge + (d.forward ? 0 : 1); }

}  // namespace

bool MonomerSet::contains(VertexId v) const {
  return std::find(sites.begin(), sites.end(), v) != sites.end();
}

PlanarGraph PlanarGraph::build(const std::vector<VertexSpec>& vertices,
                               const std::vector<EdgeSpec>& edges) {
  PlanarGraph g;
  g.vertices_.reserve(vertices.size());
  for (const VertexSpec& spec : vertices) {
    if (!g.vertex_label_index_.emplace(spec.label, g.vertices_.size()).second) {
      throw Error(ErrorCode::kPrecondition, "duplicate vertex id " + std::to_string(spec.label));
    }
    g.vertices_.push_back({spec.label, spec.position});
  }

  std::vector<VertexId> by_position(g.vertices_.size());
  for (VertexId v = 0; v < by_position.size(); ++v) by_position[v] = v;
  auto position_less = [&](VertexId a, VertexId b) {
    const Point& p = g.vertices_[a].position;
    const Point& q = g.vertices_[b].position;
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  std::sort(by_position.begin(), by_position.end(), position_less);
  for (std::size_t i = 1; i < by_position.size(); ++i) {
    const Vertex& a = g.vertices_[by_position[i - 1]];
    const Vertex& b = g.vertices_[by_position[i]];
    if (a.position == b.position) {
      throw Error(ErrorCode::kDuplicateCoordinate, "vertices " + std::to_string(a.label) + " and " +
                                                       std::to_string(b.label) + " both at " +
                                                       describe(a.position));
    }
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  g.edges_.reserve(edges.size());
  for (const EdgeSpec& spec : edges) {
    auto u = g.vertex_label_index_.find(spec.u);
    auto v = g.vertex_label_index_.find(spec.v);
    if (u == g.vertex_label_index_.end() || v == g.vertex_label_index_.end()) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge " + std::to_string(spec.label) + " references a missing vertex");
    }
    if (u->second == v->second) {
      throw Error(ErrorCode::kNonSimple, "edge " + std::to_string(spec.label) + " is a loop");
    }
    auto key = std::minmax(u->second, v->second);
    if (!seen.insert({key.first, key.second}).second) {
      throw Error(ErrorCode::kNonSimple, "edge " + std::to_string(spec.label) + " is parallel to another edge");
    }
    if (!g.edge_label_index_.emplace(spec.label, g.edges_.size()).second) {
      throw Error(ErrorCode::kPrecondition, "duplicate edge id " + std::to_string(spec.label));
    }
    g.edges_.push_back({spec.label, u->second, v->second});
  }

  // Straight-line embedding: segments may only meet at shared endpoints.
  std::vector<Box> boxes;
  boxes.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) boxes.push_back(box_of(g.vertices_[e.u].position, g.vertices_[e.v].position));
  for (EdgeId i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    const Point& a = g.vertices_[e.u].position;
    const Point& b = g.vertices_[e.v].position;
    for (VertexId w = 0; w < g.vertices_.size(); ++w) {
      if (w == e.u || w == e.v) continue;
      const Point& p = g.vertices_[w].position;
      if (boxes[i].min_x <= p.x && p.x <= boxes[i].max_x && boxes[i].min_y <= p.y &&
          p.y <= boxes[i].max_y && on_segment(p, a, b)) {
        throw Error(ErrorCode::kEdgeCrossing, "vertex " + std::to_string(g.vertices_[w].label) +
                                                  " lies on edge " + std::to_string(e.label));
      }
    }
    for (EdgeId j = i + 1; j < g.edges_.size(); ++j) {
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      const Edge& f = g.edges_[j];
      const Point& c = g.vertices_[f.u].position;
      const Point& d = g.vertices_[f.v].position;
      bool bad = false;
      VertexId shared = e.u == f.u || e.u == f.v ? e.u : (e.v == f.u || e.v == f.v ? e.v : g.vertices_.size());
      if (shared != g.vertices_.size()) {
        const Point& p = g.vertices_[shared].position;
        const Point& q = g.vertices_[shared == e.u ? e.v : e.u].position;
        const Point& r = g.vertices_[shared == f.u ? f.v : f.u].position;
        if (orientation(p, q, r) == 0) {
          Rational dot = (q.x - p.x) * (r.x - p.x) + (q.y - p.y) * (r.y - p.y);
          bad = sgn(dot) > 0;
        }
      } else {
        bad = classify_segments(a, b, c, d) != Contact::kNone;
      }
      if (bad) {
        throw Error(ErrorCode::kEdgeCrossing, "edges " + std::to_string(e.label) + " and " +
                                                  std::to_string(f.label) + " intersect");
      }
    }
  }

  g.derive_structure();
  return g;
}

void PlanarGraph::derive_structure() {
  const std::size_t n = vertices_.size();
  rotation_.assign(n, {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    rotation_[edges_[e].u].push_back(e);
    rotation_[edges_[e].v].push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    const Point& origin = vertices_[v].position;
    auto direction = [&](EdgeId e) {
      const Point& p = vertices_[other_end(e, v)].position;
      return Point{p.x - origin.x, p.y - origin.y};
    };
    std::sort(rotation_[v].begin(), rotation_[v].end(),
              [&](EdgeId a, EdgeId b) { return angle_less(direction(a), direction(b)); });
  }
  rotation_slot_.assign(edges_.size(), {0, 0});
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const EdgeId e = rotation_[v][i];
      rotation_slot_[e][edges_[e].u == v ? 0 : 1] = i;
    }
  }

  faces_ = dimerlab::faces(*this);
  dart_face_.assign(2 * edges_.size(), 0);
  for (const Face& f : faces_) {
    for (const DirectedEdge& d : f.boundary) dart_face_[dart_index(d)] = f.id;
  }
}

VertexId PlanarGraph::other_end(EdgeId e, VertexId v) const {
  return edges_[e].u == v ? edges_[e].v : edges_[e].u;
}

VertexId PlanarGraph::tail(const DirectedEdge& d) const {
  return d.forward ? edges_[d.edge].u : edges_[d.edge].v;
}

VertexId PlanarGraph::head(const DirectedEdge& d) const {
  return d.forward ? edges_[d.edge].v : edges_[d.edge].u;
}

std::optional<EdgeId> PlanarGraph::find_edge(VertexId u, VertexId v) const {
  for (EdgeId e : rotation_[u]) {
    if (other_end(e, u) == v) return e;
  }
  return std::nullopt;
}

VertexId PlanarGraph::vertex_by_label(Label label) const {
  auto it = vertex_label_index_.find(label);
  if (it == vertex_label_index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "no vertex with id " + std::to_string(label));
  }
  return it->second;
}

EdgeId PlanarGraph::edge_by_label(Label label) const {
  auto it = edge_label_index_.find(label);
  if (it == edge_label_index_.end()) {
    throw Error(ErrorCode::kUnknownEdge, "no edge with id " + std::to_string(label));
  }
  return it->second;
}

FaceId PlanarGraph::face_of(const DirectedEdge& d) const { return dart_face_[dart_index(d)]; }

FaceId PlanarGraph::outer_face() const {
  if (!is_connected() || vertices_.empty()) {
    throw Error(ErrorCode::kDisconnected, "outer face requires a connected graph");
  }
  for (const Face& f : faces_) {
    if (f.is_outer) return f.id;
  }
  throw Error(ErrorCode::kPrecondition, "graph has no outer face");
}

std::vector<std::size_t> PlanarGraph::component_labels() const {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(vertices_.size(), kUnset);
  std::size_t next = 0;
  for (VertexId s = 0; s < vertices_.size(); ++s) {
    if (label[s] != kUnset) continue;
    std::deque<VertexId> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : rotation_[v]) {
        VertexId w = other_end(e, v);
        if (label[w] == kUnset) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t PlanarGraph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool PlanarGraph::is_connected() const { return component_count() <= 1; }

PlanarGraph build_graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges) {
  return PlanarGraph::build(vertices, edges);
}

std::vector<Face> faces(const PlanarGraph& graph) {
  const std::size_t m = graph.edge_count();
  std::vector<bool> used(2 * m, false);
  std::vector<Face> result;
  std::vector<Rational> areas;
  auto next_dart = [&](const DirectedEdge& d) {
    const VertexId v = graph.head(d);
    const auto& rot = graph.rotation(v);
    const std::size_t slot =
        std::find(rot.begin(), rot.end(), d.edge) - rot.begin();
    const EdgeId e = rot[(slot + rot.size() - 1) % rot.size()];
    return DirectedEdge{e, graph.edge(e).u == v};
  };
  for (std::size_t start = 0; start < 2 * m; ++start) {
    if (used[start]) continue;
    Face face{result.size(), {}, false};
    DirectedEdge d{start / 2, start % 2 == 0};
    std::vector<Point> polygon;
    while (!used[dart_index(d)]) {
      used[dart_index(d)] = true;
      face.boundary.push_back(d);
      polygon.push_back(graph.vertex(graph.tail(d)).position);
      d = next_dart(d);
    }
    areas.push_back(twice_signed_area(polygon));
    result.push_back(std::move(face));
  }

  if (result.empty()) {
    if (graph.vertex_count() > 0) result.push_back(Face{0, {}, true});
    return result;
  }

  // Each component contributes one walk of non-positive area (its outside).
  // It is part of the unbounded face unless a bounded face of another
  // component encloses it.
  const auto component = graph.component_labels();
  for (std::size_t f = 0; f < result.size(); ++f) {
    if (sgn(areas[f]) > 0) continue;
    const std::size_t comp = component[graph.tail(result[f].boundary.front())];
    const Point& probe = graph.vertex(graph.tail(result[f].boundary.front())).position;
    bool enclosed = false;
    for (std::size_t g = 0; g < result.size() && !enclosed; ++g) {
      if (sgn(areas[g]) <= 0 || component[graph.tail(result[g].boundary.front())] == comp) continue;
      std::vector<Point> polygon;
      for (const DirectedEdge& d : result[g].boundary) polygon.push_back(graph.vertex(graph.tail(d)).position);
      enclosed = winding_number(polygon, probe) != 0;
    }
    result[f].is_outer = !enclosed;
  }
  return result;
}

std::vector<VertexId> outer_boundary_order(const PlanarGraph& graph) {
  if (!graph.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "outer boundary order requires a connected graph");
  }
  if (graph.vertex_count() == 0) return {};
  const Face& outer = graph.face(graph.outer_face());
  if (outer.boundary.empty()) return {0};
  // The outer walk keeps the unbounded face on its left, i.e. runs clockwise.
  std::vector<VertexId> walk;
  const std::size_t k = outer.boundary.size();
  for (std::size_t i = 0; i < k; ++i) walk.push_back(graph.tail(outer.boundary[(k - i) % k]));
  const std::size_t start = std::min_element(walk.begin(), walk.end()) - walk.begin();
  std::vector<VertexId> order;
  std::vector<bool> seen(graph.vertex_count(), false);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId v = walk[(start + i) % k];
    if (!seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  }
  return order;
}

PlanarGraph deplete(const PlanarGraph& graph, const MonomerSet& removed) {
  validate_monomers(graph, removed);
  std::vector<bool> gone(graph.vertex_count(), false);
  for (VertexId v : removed.sites) gone[v] = true;
  PlanarGraph sub;
  std::vector<VertexId> new_index(graph.vertex_count(), 0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (gone[v]) continue;
    new_index[v] = sub.vertices_.size();
    sub.vertex_label_index_.emplace(graph.vertex(v).label, sub.vertices_.size());
    sub.vertices_.push_back(graph.vertex(v));
  }
  for (const Edge& e : graph.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    sub.edge_label_index_.emplace(e.label, sub.edges_.size());
    sub.edges_.push_back({e.label, new_index[e.u], new_index[e.v]});
  }
  sub.derive_structure();
  return sub;
}

FaceId locate_face(const PlanarGraph& graph, const Point& p) {
  for (const Vertex& v : graph.vertices()) {
    if (v.position == p) {
      throw Error(ErrorCode::kDegenerateCrossing, "point " + describe(p) + " is a vertex");
    }
  }
  for (const Edge& e : graph.edges()) {
    if (on_segment(p, graph.vertex(e.u).position, graph.vertex(e.v).position)) {
      throw Error(ErrorCode::kDegenerateCrossing,
                  "point " + describe(p) + " lies on edge " + std::to_string(e.label));
    }
  }
  std::optional<FaceId> best;
  Rational best_area;
  for (const Face& f : graph.faces()) {
    if (f.boundary.empty()) continue;
    std::vector<Point> polygon;
    for (const DirectedEdge& d : f.boundary) polygon.push_back(graph.vertex(graph.tail(d)).position);
    Rational area = twice_signed_area(polygon);
    if (sgn(area) <= 0) continue;
    if (winding_number(polygon, p) == 0) continue;
    if (!best || area < best_area) {
      best = f.id;
      best_area = area;
    }
  }
  if (best) return *best;
  for (const Face& f : graph.faces()) {
    if (f.is_outer) return f.id;
  }
  throw Error(ErrorCode::kPrecondition, "graph has no faces");
}

std::vector<VertexId> face_vertices(const PlanarGraph& graph, FaceId f) {
  std::vector<VertexId> result;
  for (const DirectedEdge& d : graph.face(f).boundary) {
    const VertexId v = graph.tail(d);
    if (std::find(result.begin(), result.end(), v) == result.end()) result.push_back(v);
  }
  if (result.empty() && graph.vertex_count() == 1) result.push_back(0);
  return result;
}

void validate_monomers(const PlanarGraph& graph, const MonomerSet& m) {
  std::vector<bool> seen(graph.vertex_count(), false);
  for (VertexId v : m.sites) {
    if (v >= graph.vertex_count()) {
      throw Error(ErrorCode::kUnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    }
    if (seen[v]) {
      throw Error(ErrorCode::kPrecondition, "vertex index " + std::to_string(v) + " repeated");
    }
    seen[v] = true;
  }
}

}  // namespace dimerlab
