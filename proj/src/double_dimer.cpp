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

#include "dimerlab/double_dimer.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

struct Incidence {
  EdgeId edge;
  VertexId other;
};

// Adjacency of the symmetric difference omega1 xor omega2.
std::vector<std::vector<Incidence>> symmetric_difference(const PlanarGraph& graph,
                                                         const DoubleCover& cover,
                                                         std::vector<EdgeId>& doubles) {
  std::vector<std::vector<Incidence>> adjacency(graph.vertex_count());
  const auto& a = cover.omega1.edges;
  const auto& b = cover.omega2.edges;
  std::vector<EdgeId> single;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(doubles));
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(single));
  for (EdgeId e : single) {
    const Edge& edge = graph.edge(e);
    adjacency[edge.u].push_back({e, edge.v});
    adjacency[edge.v].push_back({e, edge.u});
  }
  return adjacency;
}

bool in_sorted(const std::vector<EdgeId>& edges, EdgeId e) {
  return std::binary_search(edges.begin(), edges.end(), e);
}

MonomerSet sorted_union(const MonomerSet& m, std::initializer_list<VertexId> extra) {
  MonomerSet out = m;
  for (VertexId v : extra) out.sites.push_back(v);
  std::sort(out.sites.begin(), out.sites.end());
  return out;
}

ConnectionSpec with_pair(const ConnectionSpec& c, VertexId x, VertexId y) {
  ConnectionSpec out = c;
  out.emplace_back(x, y);
  return out;
}

}  // namespace

const OpenPath* LoopPathDecomposition::path_between(VertexId x, VertexId y) const {
  for (const OpenPath& p : open_paths) {
    if (p.connects(x, y)) return &p;
  }
  return nullptr;
}

VertexId LoopPathDecomposition::partner(VertexId x) const {
  for (const OpenPath& p : open_paths) {
    if (p.front() == x) return p.back();
    if (p.back() == x) return p.front();
  }
  throw Error(ErrorCode::kPathNotInDecomposition, "no path ends at vertex " + std::to_string(x));
}

void check_disjoint(const MonomerSet& m1, const MonomerSet& m2) {
  for (VertexId v : m1.sites) {
    if (m2.contains(v)) {
      throw Error(ErrorCode::kOverlappingMonomers, "vertex " + std::to_string(v) + " lies in M1 and M2");
    }
  }
}

LoopPathDecomposition overlay(const PlanarGraph& graph, const DoubleCover& cover) {
  LoopPathDecomposition out;
  const auto adjacency = symmetric_difference(graph, cover, out.double_edges);
  std::vector<bool> visited(graph.vertex_count(), false);

  auto walk = [&](VertexId start, EdgeId first_edge, std::vector<VertexId>& vertices,
                  std::vector<EdgeId>& edges) {
    VertexId v = start;
    EdgeId e = first_edge;
    visited[v] = true;
    vertices.push_back(v);
    while (true) {
      const VertexId w = graph.other_end(e, v);
      edges.push_back(e);
      if (visited[w]) return;  // loop closed
      visited[w] = true;
      vertices.push_back(w);
      const auto& next = adjacency[w];
      if (next.size() < 2) return;  // path ends at a monomer
      e = next[0].edge == e ? next[1].edge : next[0].edge;
      v = w;
    }
  };

  std::vector<VertexId> monomers = cover.m1().sites;
  monomers.insert(monomers.end(), cover.m2().sites.begin(), cover.m2().sites.end());
  std::sort(monomers.begin(), monomers.end());
  for (VertexId x : monomers) {
    if (visited[x] || adjacency[x].empty()) continue;
    OpenPath path;
    walk(x, adjacency[x].front().edge, path.vertices, path.edges);
    out.open_paths.push_back(std::move(path));
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (visited[v] || adjacency[v].empty()) continue;
    // Start along the omega1 edge so the direction does not depend on storage.
    EdgeId first = adjacency[v].front().edge;
    for (const Incidence& inc : adjacency[v]) {
      if (in_sorted(cover.omega1.edges, inc.edge)) first = inc.edge;
    }
    SimpleLoop loop;
    walk(v, first, loop.vertices, loop.edges);
    out.simple_loops.push_back(std::move(loop));
  }
  return out;
}

std::uint64_t class_size(const LoopPathDecomposition& decomposition) {
  return std::uint64_t{1} << decomposition.n_s();
}

bool satisfies(const LoopPathDecomposition& decomposition, const ConnectionSpec& c) {
  return std::all_of(c.begin(), c.end(), [&](const auto& pair) {
    return decomposition.path_between(pair.first, pair.second) != nullptr;
  });
}

void for_each_double_cover(const PlanarGraph& graph, const MonomerSet& m1, const MonomerSet& m2,
                           const std::function<void(const DoubleCover&)>& visit,
                           const EnumerationOptions& options) {
  check_disjoint(m1, m2);
  const std::vector<Matching> second = enumerate_matchings(graph, m2, options);
  if (second.empty()) return;
  DoubleCover cover;
  for_each_matching(
      graph, m1,
      [&](const Matching& omega1) {
        cover.omega1 = omega1;
        for (const Matching& omega2 : second) {
          cover.omega2 = omega2;
          visit(cover);
        }
        return true;
      },
      options);
}

Scalar connection_amplitude(const PlanarGraph& graph, const WeightMap& weights,
                            const MonomerSet& m1, const MonomerSet& m2, const ConnectionSpec& c,
                            const EnumerationOptions& options) {
  Scalar total(0);
  for_each_double_cover(
      graph, m1, m2,
      [&](const DoubleCover& cover) {
        if (!satisfies(overlay(graph, cover), c)) return;
        total += weight_of(weights, cover.omega1.edges) * weight_of(weights, cover.omega2.edges);
      },
      options);
  return total;
}

DoubleCover switch_path(const PlanarGraph& graph, const DoubleCover& cover, const OpenPath& gamma) {
  std::vector<EdgeId> gamma_edges = gamma.edges;
  std::sort(gamma_edges.begin(), gamma_edges.end());
  const LoopPathDecomposition decomposition = overlay(graph, cover);
  const bool found = std::any_of(
      decomposition.open_paths.begin(), decomposition.open_paths.end(), [&](const OpenPath& p) {
        std::vector<EdgeId> edges = p.edges;
        std::sort(edges.begin(), edges.end());
        return edges == gamma_edges && p.connects(gamma.front(), gamma.back());
      });
  if (!found) throw Error(ErrorCode::kPathNotInDecomposition, "path is not a component of the overlay");

  auto toggle = [&](const std::vector<EdgeId>& edges) {
    std::vector<EdgeId> out;
    std::set_symmetric_difference(edges.begin(), edges.end(), gamma_edges.begin(), gamma_edges.end(),
                                  std::back_inserter(out));
    return out;
  };
  auto move_ends = [&](const MonomerSet& from, const MonomerSet& to) {
    MonomerSet out;
    for (VertexId v : to.sites) {
      if (v != gamma.front() && v != gamma.back()) out.sites.push_back(v);
    }
    for (VertexId v : from.sites) {
      if (v == gamma.front() || v == gamma.back()) out.sites.push_back(v);
    }
    std::sort(out.sites.begin(), out.sites.end());
    return out;
  };

  DoubleCover switched;
  switched.omega1.edges = toggle(cover.omega1.edges);
  switched.omega2.edges = toggle(cover.omega2.edges);
  // An endpoint of gamma in M1 ends up in M2 and vice versa.
  switched.omega1.depleted_by = move_ends(cover.m2(), cover.m1());
  switched.omega2.depleted_by = move_ends(cover.m1(), cover.m2());
  return switched;
}

bool degree_formula_holds(const PlanarGraph& graph, const DoubleCover& cover) {
  std::vector<std::size_t> degree(graph.vertex_count(), 0);
  for (const auto* omega : {&cover.omega1, &cover.omega2}) {
    for (EdgeId e : omega->edges) {
      ++degree[graph.edge(e).u];
      ++degree[graph.edge(e).v];
    }
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const bool monomer = cover.m1().contains(v) || cover.m2().contains(v);
    if (degree[v] != (monomer ? 1u : 2u)) return false;
  }
  return true;
}

bool parity_clause_holds(const PlanarGraph& graph, const DoubleCover& cover,
                         const LoopPathDecomposition& decomposition) {
  for (const SimpleLoop& loop : decomposition.simple_loops) {
    if (loop.edges.size() % 2 != 0 || loop.edges.size() < 4) return false;
  }
  for (const OpenPath& path : decomposition.open_paths) {
    const bool front_in_m1 = cover.m1().contains(path.front());
    const bool back_in_m1 = cover.m1().contains(path.back());
    const bool ends_are_monomers = (front_in_m1 || cover.m2().contains(path.front())) &&
                                   (back_in_m1 || cover.m2().contains(path.back()));
    if (!ends_are_monomers) return false;
    const bool odd = path.edges.size() % 2 == 1;
    if (odd != (front_in_m1 == back_in_m1)) return false;
  }
  std::vector<EdgeId> rebuilt;
  for (EdgeId e : decomposition.double_edges) {
    rebuilt.push_back(e);
    rebuilt.push_back(e);
  }
  for (const SimpleLoop& loop : decomposition.simple_loops) {
    rebuilt.insert(rebuilt.end(), loop.edges.begin(), loop.edges.end());
  }
  for (const OpenPath& path : decomposition.open_paths) {
    rebuilt.insert(rebuilt.end(), path.edges.begin(), path.edges.end());
  }
  std::vector<EdgeId> multiset = cover.omega1.edges;
  multiset.insert(multiset.end(), cover.omega2.edges.begin(), cover.omega2.edges.end());
  std::sort(rebuilt.begin(), rebuilt.end());
  std::sort(multiset.begin(), multiset.end());
  (void)graph;
  return rebuilt == multiset;
}

Lemma1Audit audit_lemma1(const PlanarGraph& graph, const MonomerSet& m1, const MonomerSet& m2,
                         const EnumerationOptions& options) {
  Lemma1Audit audit;
  // Gamma is the edge multiset of the overlay: double edges, then single ones.
  std::map<std::vector<EdgeId>, std::pair<std::uint64_t, std::uint64_t>> classes;
  for_each_double_cover(
      graph, m1, m2,
      [&](const DoubleCover& cover) {
        ++audit.covers;
        if (!degree_formula_holds(graph, cover)) ++audit.degree_failures;
        const LoopPathDecomposition d = overlay(graph, cover);
        if (!parity_clause_holds(graph, cover, d)) ++audit.parity_failures;
        std::vector<EdgeId> key = d.double_edges;
        key.push_back(static_cast<EdgeId>(-1));
        std::vector<EdgeId> single;
        const auto& a = cover.omega1.edges;
        const auto& b = cover.omega2.edges;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(single));
        key.insert(key.end(), single.begin(), single.end());
        auto& entry = classes[key];
        ++entry.first;
        entry.second = class_size(d);
      },
      options);
  audit.classes = classes.size();
  for (const auto& [key, entry] : classes) {
    audit.class_size_sum += entry.second;
    if (entry.first != entry.second) ++audit.class_size_failures;
  }
  return audit;
}

SwitchingReport verify_switching_I(const PlanarGraph& graph, const WeightMap& weights,
                                   const MonomerSet& m1, const MonomerSet& m2, VertexId x,
                                   VertexId y, const ConnectionSpec& c,
                                   const EnumerationOptions& options) {
  if (x == y || m1.contains(x) || m1.contains(y) || m2.contains(x) || m2.contains(y)) {
    throw Error(ErrorCode::kPrecondition, "x and y must be distinct and outside M1 u M2");
  }
  const ConnectionSpec cxy = with_pair(c, x, y);
  SwitchingReport report;
  report.same_side_lhs = connection_amplitude(graph, weights, sorted_union(m1, {x, y}), m2, cxy, options);
  report.same_side_rhs = connection_amplitude(graph, weights, m1, sorted_union(m2, {x, y}), cxy, options);
  report.cross_lhs = connection_amplitude(graph, weights, sorted_union(m1, {x}), sorted_union(m2, {y}), cxy, options);
  report.cross_rhs = connection_amplitude(graph, weights, sorted_union(m1, {y}), sorted_union(m2, {x}), cxy, options);
  report.same_side_equal = report.same_side_lhs == report.same_side_rhs;
  report.cross_equal = report.cross_lhs == report.cross_rhs;
  return report;
}

}  // namespace dimerlab
