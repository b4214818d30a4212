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

#include "dimerlab/disorder.hpp"

#include <algorithm>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

std::string describe(const Point& p) {
  return "(" + rational_to_string(p.x) + ", " + rational_to_string(p.y) + ")";
}

const Point& position(const PlanarGraph& graph, VertexId v) { return graph.vertex(v).position; }

// Any contact between two segments, either of which may be a single point.
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b) return on_segment(a, c, d);
  if (c == d) return on_segment(c, a, b);
  return classify_segments(a, b, c, d) != Contact::kNone;
}

bool lines_meet(const DisorderLine& p, const DisorderLine& q) {
  auto segment = [](const DisorderLine& line, std::size_t i) {
    const std::size_t j = line.points.size() == 1 ? 0 : i + 1;
    return std::pair<const Point&, const Point&>(line.points[i], line.points[j]);
  };
  const std::size_t np = std::max<std::size_t>(1, p.points.size() - 1);
  const std::size_t nq = std::max<std::size_t>(1, q.points.size() - 1);
  for (std::size_t i = 0; i < np; ++i) {
    const auto [a, b] = segment(p, i);
    for (std::size_t j = 0; j < nq; ++j) {
      const auto [c, d] = segment(q, j);
      if (segments_meet(a, b, c, d)) return true;
    }
  }
  return false;
}

// A segment inside a single face: no contact with any vertex or edge.
void require_inside_face(const PlanarGraph& graph, const Point& a, const Point& b) {
  for (const Edge& e : graph.edges()) {
    if (segments_meet(a, b, position(graph, e.u), position(graph, e.v))) {
      throw Error(ErrorCode::kDegenerateCrossing,
                  "connector " + describe(a) + " - " + describe(b) + " leaves its face at edge " +
                      std::to_string(e.label));
    }
  }
}

// Directed boundary walk of the grand central, starting at the dart with the
// smallest edge index (forward first).
std::vector<DirectedEdge> reference_walk(const PlanarGraph& graph, FaceId f) {
  std::vector<DirectedEdge> walk = graph.face(f).boundary;
  if (walk.empty()) return walk;
  auto lower = [](const DirectedEdge& a, const DirectedEdge& b) {
    return a.edge != b.edge ? a.edge < b.edge : (a.forward && !b.forward);
  };
  auto start = std::min_element(walk.begin(), walk.end(), lower);
  std::rotate(walk.begin(), start, walk.end());
  return walk;
}

}  // namespace

void validate_line(const PlanarGraph& graph, const DisorderLine& line) {
  if (line.points.empty()) throw Error(ErrorCode::kPrecondition, "disorder line without points");
  for (const Point& p : line.points) {
    for (const Vertex& v : graph.vertices()) {
      if (v.position == p) throw Error(ErrorCode::kDegenerateCrossing, "line point " + describe(p) + " is a vertex");
    }
    for (const Edge& e : graph.edges()) {
      if (on_segment(p, position(graph, e.u), position(graph, e.v))) {
        throw Error(ErrorCode::kDegenerateCrossing,
                    "line point " + describe(p) + " lies on edge " + std::to_string(e.label));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const Point& a = line.points[i];
    const Point& b = line.points[i + 1];
    if (a == b) continue;
    for (const Vertex& v : graph.vertices()) {
      if (on_segment(v.position, a, b)) {
        throw Error(ErrorCode::kDegenerateCrossing,
                    "segment " + describe(a) + " - " + describe(b) + " passes through vertex " +
                        std::to_string(v.label));
      }
    }
    for (const Edge& e : graph.edges()) {
      if (classify_segments(a, b, position(graph, e.u), position(graph, e.v)) == Contact::kTouch) {
        throw Error(ErrorCode::kDegenerateCrossing,
                    "segment " + describe(a) + " - " + describe(b) + " touches edge " +
                        std::to_string(e.label) + " without crossing it");
      }
    }
  }
}

std::vector<std::size_t> crossing_counts(const PlanarGraph& graph, const DisorderLine& line) {
  validate_line(graph, line);
  std::vector<std::size_t> counts(graph.edge_count(), 0);
  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const Point& a = line.points[i];
    const Point& b = line.points[i + 1];
    if (a == b) continue;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      const Edge& edge = graph.edge(e);
      if (classify_segments(a, b, position(graph, edge.u), position(graph, edge.v)) == Contact::kProper) {
        ++counts[e];
      }
    }
  }
  return counts;
}

EdgeFlipSet l_star(const PlanarGraph& graph, const DisorderLine& line) {
  const auto counts = crossing_counts(graph, line);
  EdgeFlipSet odd;
  for (EdgeId e = 0; e < counts.size(); ++e) {
    if (counts[e] % 2 == 1) odd.push_back(e);
  }
  return odd;
}

std::pair<FaceId, FaceId> endpoint_faces(const PlanarGraph& graph, const DisorderLine& line) {
  if (line.points.empty()) throw Error(ErrorCode::kPrecondition, "disorder line without points");
  return {locate_face(graph, line.points.front()), locate_face(graph, line.points.back())};
}

std::vector<bool> flip_parity(const PlanarGraph& graph, const std::vector<DisorderLine>& lines) {
  std::vector<bool> parity(graph.edge_count(), false);
  for (const DisorderLine& line : lines) {
    for (EdgeId e : l_star(graph, line)) parity[e] = !parity[e];
  }
  return parity;
}

bool odd_intersection(const std::vector<EdgeId>& edges, const std::vector<bool>& parity) {
  bool odd = false;
  for (EdgeId e : edges) {
    if (parity[e]) odd = !odd;
  }
  return odd;
}

WeightMap apply_flips(const WeightMap& weights, const std::vector<bool>& parity) {
  WeightMap flipped = weights;
  for (EdgeId e = 0; e < parity.size(); ++e) {
    if (parity[e]) flipped[e] = -flipped[e];
  }
  return flipped;
}

Scalar disorder_expectation(const PlanarGraph& graph, const WeightMap& weights,
                            const std::vector<DisorderLine>& lines) {
  const Scalar z = fast_partition_function(graph, weights);
  if (z.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  return fast_partition_function(graph, apply_flips(weights, flip_parity(graph, lines))) / z;
}

Scalar disorder_expectation_signed_sum(const PlanarGraph& graph, const WeightMap& weights,
                                       const std::vector<DisorderLine>& lines) {
  const auto parity = flip_parity(graph, lines);
  Scalar z(0);
  Scalar signed_sum(0);
  for_each_matching(graph, {}, [&](const Matching& omega) {
    const Scalar chi = weight_of(weights, omega.edges);
    z += chi;
    if (odd_intersection(omega.edges, parity)) {
      signed_sum -= chi;
    } else {
      signed_sum += chi;
    }
    return true;
  });
  if (z.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  return signed_sum / z;
}

std::vector<VertexId> swept_vertices(const PlanarGraph& graph, const DisorderLine& line,
                                     const DisorderLine& deformed) {
  validate_line(graph, line);
  validate_line(graph, deformed);
  if (endpoint_faces(graph, line) != endpoint_faces(graph, deformed)) {
    throw Error(ErrorCode::kPrecondition, "deformed line must keep the end faces");
  }
  const Point& near_a = line.points.front();
  const Point& near_b = deformed.points.front();
  const Point& far_a = line.points.back();
  const Point& far_b = deformed.points.back();
  if (far_a != far_b) require_inside_face(graph, far_a, far_b);
  if (near_a != near_b) require_inside_face(graph, near_b, near_a);

  std::vector<Point> curve = line.points;
  curve.insert(curve.end(), deformed.points.rbegin(), deformed.points.rend());
  std::vector<VertexId> swept;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (winding_number(curve, position(graph, v)) % 2 != 0) swept.push_back(v);
  }
  return swept;
}

HomotopyReport homotopy_check(const PlanarGraph& graph, const WeightMap& weights,
                              const DisorderLine& line, const DisorderLine& deformed) {
  HomotopyReport report;
  report.swept = swept_vertices(graph, line, deformed).size();
  report.original = disorder_expectation(graph, weights, {line});
  report.deformed = disorder_expectation(graph, weights, {deformed});
  report.equal = report.deformed == sign_power(static_cast<long>(report.swept)) * report.original;
  return report;
}

FaceId validate_canonical(const PlanarGraph& graph, const std::vector<CanonicalPair>& pairs) {
  std::optional<FaceId> grand_central;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const CanonicalPair& p = pairs[i];
    if (p.site >= graph.vertex_count()) {
      throw Error(ErrorCode::kUnknownVertex, "site " + std::to_string(p.site) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pairs[j].site == p.site) {
        throw Error(ErrorCode::kNonCanonical, "site " + std::to_string(graph.vertex(p.site).label) + " repeats");
      }
    }
    validate_line(graph, p.line);
    const auto [near, far] = endpoint_faces(graph, p.line);
    if (grand_central && *grand_central != near) {
      throw Error(ErrorCode::kNonCanonical, "lines start in different faces");
    }
    grand_central = near;
    const auto around = face_vertices(graph, far);
    if (std::find(around.begin(), around.end(), p.site) == around.end()) {
      throw Error(ErrorCode::kNonCanonical, "line of site " + std::to_string(graph.vertex(p.site).label) +
                                                " does not end in a face adjacent to it");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (lines_meet(pairs[j].line, p.line)) {
        throw Error(ErrorCode::kNonCanonical, "lines of sites " + std::to_string(graph.vertex(pairs[j].site).label) +
                                                  " and " + std::to_string(graph.vertex(p.site).label) + " meet");
      }
    }
  }
  if (!grand_central) return graph.outer_face();
  return *grand_central;
}

Scalar mu_correlator(const PlanarGraph& graph, const WeightMap& weights,
                     const std::vector<CanonicalPair>& pairs) {
  if (pairs.size() % 2 != 0) throw Error(ErrorCode::kPrecondition, "odd number of order-disorder pairs");
  validate_canonical(graph, pairs);
  const Scalar z = partition_function(graph, weights);
  if (z.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  MonomerSet sites;
  std::vector<DisorderLine> lines;
  for (const CanonicalPair& p : pairs) {
    sites.sites.push_back(p.site);
    lines.push_back(p.line);
  }
  return partition_function(graph, apply_flips(weights, flip_parity(graph, lines)), sites) / z;
}

BoundaryPosition exit_position(const PlanarGraph& graph, FaceId grand_central, const CanonicalPair& pair) {
  const std::vector<DirectedEdge> walk = reference_walk(graph, grand_central);
  const DisorderLine& line = pair.line;
  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const Point& a = line.points[i];
    const Point& b = line.points[i + 1];
    if (a == b) continue;
    std::optional<EdgeId> first;
    Rational first_t;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      const Point& c = position(graph, graph.edge(e).u);
      const Point& d = position(graph, graph.edge(e).v);
      if (classify_segments(a, b, c, d) != Contact::kProper) continue;
      const Rational t = crossing_parameter(a, b, c, d);
      if (!first || t < first_t) {
        first = e;
        first_t = t;
      }
    }
    if (!first) continue;
    const Edge& edge = graph.edge(*first);
    // The dart whose left side the line comes from.
    const bool forward = orientation(position(graph, edge.u), position(graph, edge.v), a) > 0;
    const DirectedEdge dart{*first, forward};
    for (std::size_t step = 0; step < walk.size(); ++step) {
      if (!(walk[step] == dart)) continue;
      const Point& tail = position(graph, graph.tail(dart));
      const Point& head = position(graph, graph.head(dart));
      return {step, crossing_parameter(tail, head, a, b)};
    }
    throw Error(ErrorCode::kNonCanonical, "line of site " + std::to_string(graph.vertex(pair.site).label) +
                                              " leaves the grand central through a foreign edge");
  }
  for (std::size_t step = 0; step < walk.size(); ++step) {
    if (graph.tail(walk[step]) == pair.site) return {step, Rational(0)};
  }
  throw Error(ErrorCode::kNonCanonical, "site " + std::to_string(graph.vertex(pair.site).label) +
                                            " is not on the grand central boundary");
}

std::vector<CanonicalPair> cyclic_order(const PlanarGraph& graph, const std::vector<CanonicalPair>& pairs) {
  const FaceId grand_central = validate_canonical(graph, pairs);
  std::vector<std::pair<BoundaryPosition, std::size_t>> keyed;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    keyed.emplace_back(exit_position(graph, grand_central, pairs[i]), i);
  }
  auto before = [](const BoundaryPosition& a, const BoundaryPosition& b) {
    return a.step != b.step ? a.step < b.step : a.offset < b.offset;
  };
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) { return before(a.first, b.first); });
  std::vector<CanonicalPair> ordered;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && !before(keyed[i - 1].first, keyed[i].first)) {
      throw Error(ErrorCode::kSharedExitPoint, "two lines leave the grand central at the same point");
    }
    ordered.push_back(pairs[keyed[i].second]);
  }
  return ordered;
}

Scalar signed_amplitude(const PlanarGraph& graph, const WeightMap& weights,
                        const SignedAmplitudeSpec& spec, const EnumerationOptions& options) {
  const auto parity1 = flip_parity(graph, spec.l1);
  const auto parity2 = flip_parity(graph, spec.l2);
  Scalar total(0);
  for_each_double_cover(
      graph, spec.m1, spec.m2,
      [&](const DoubleCover& cover) {
        if (!satisfies(overlay(graph, cover), spec.c)) return;
        Scalar term = weight_of(weights, cover.omega1.edges) * weight_of(weights, cover.omega2.edges);
        if (odd_intersection(cover.omega1.edges, parity1) != odd_intersection(cover.omega2.edges, parity2)) {
          term = -term;
        }
        total += term;
      },
      options);
  return total;
}

SignedAmplitudeSpec split_pairs(const std::vector<CanonicalPair>& pairs, const std::vector<std::size_t>& first,
                                const ConnectionSpec& c) {
  SignedAmplitudeSpec spec;
  for (std::size_t label = 1; label <= pairs.size(); ++label) {
    const CanonicalPair& p = pairs[label - 1];
    if (std::find(first.begin(), first.end(), label) != first.end()) {
      spec.m1.sites.push_back(p.site);
      spec.l1.push_back(p.line);
    } else {
      spec.m2.sites.push_back(p.site);
      spec.l2.push_back(p.line);
    }
  }
  spec.c = c;
  return spec;
}

SwitchingIIReport verify_switching_II(const PlanarGraph& graph, const WeightMap& weights,
                                      const std::vector<CanonicalPair>& pairs, std::size_t k,
                                      std::size_t l, std::size_t m) {
  const std::size_t n2 = pairs.size();
  auto in_range = [&](std::size_t label) { return label >= 2 && label <= n2; };
  if (n2 % 2 != 0 || n2 < 2 || !in_range(k)) {
    throw Error(ErrorCode::kPrecondition, "labels must lie in {2..2n}");
  }
  validate_canonical(graph, pairs);
  auto site = [&](std::size_t label) { return pairs[label - 1].site; };

  SwitchingIIReport report;
  const ConnectionSpec c1k{{site(1), site(k)}};
  report.first_lhs = signed_amplitude(graph, weights, split_pairs(pairs, {1, k}, c1k));
  report.first_rhs = sign_power(static_cast<long>(k)) * signed_amplitude(graph, weights, split_pairs(pairs, {}, c1k));
  report.first_equal = report.first_lhs == report.first_rhs;

  if (n2 == 2) {
    report.second_lhs = report.second_rhs = Scalar(0);
    report.second_equal = true;
    return report;
  }
  if (!in_range(l) || !in_range(m) || k == l || l == m || k == m) {
    throw Error(ErrorCode::kPrecondition, "k, l, m must be distinct labels in {2..2n}");
  }
  const ConnectionSpec c2{{site(1), site(m)}, {site(k), site(l)}};
  report.second_lhs = signed_amplitude(graph, weights, split_pairs(pairs, {1, k}, c2));
  report.second_rhs = sign_power(static_cast<long>(k) - static_cast<long>(l) - 1) *
                      signed_amplitude(graph, weights, split_pairs(pairs, {1, l}, c2));
  report.second_equal = report.second_lhs == report.second_rhs;
  return report;
}

namespace {

// Shared by the single check and the sweep; `line_parity[j]` is l_j* as a mask.
IntersectionParityReport parity_report(const std::vector<std::vector<bool>>& line_parity,
                                       const std::vector<bool>& parity_all, const DoubleCover& cover,
                                       const OpenPath& gamma, std::size_t k, std::size_t l) {
  bool odd = odd_intersection(gamma.edges, parity_all);
  for (const auto* omega : {&cover.omega1, &cover.omega2}) {
    for (EdgeId e : omega->edges) {
      if (line_parity[k - 1][e] != line_parity[l - 1][e]) odd = !odd;
    }
  }
  IntersectionParityReport report;
  report.observed = odd ? -1 : 1;
  report.expected = (static_cast<long>(k) - static_cast<long>(l) - 1) % 2 == 0 ? 1 : -1;
  report.equal = report.observed == report.expected;
  return report;
}

std::vector<std::vector<bool>> line_parities(const PlanarGraph& graph, const std::vector<CanonicalPair>& pairs,
                                             std::vector<bool>& parity_all) {
  std::vector<std::vector<bool>> out;
  parity_all.assign(graph.edge_count(), false);
  for (const CanonicalPair& p : pairs) {
    out.push_back(flip_parity(graph, {p.line}));
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      if (out.back()[e]) parity_all[e] = !parity_all[e];
    }
  }
  return out;
}

}  // namespace

IntersectionParityReport intersection_parity_check(const PlanarGraph& graph,
                                                   const std::vector<CanonicalPair>& pairs,
                                                   const DoubleCover& cover,
                                                   const LoopPathDecomposition& decomposition,
                                                   std::size_t k, std::size_t l) {
  if (k == l || k < 1 || l < 1 || k > pairs.size() || l > pairs.size()) {
    throw Error(ErrorCode::kPrecondition, "k and l must be distinct labels");
  }
  const OpenPath* gamma = decomposition.path_between(pairs[k - 1].site, pairs[l - 1].site);
  if (gamma == nullptr) {
    throw Error(ErrorCode::kNotConnected, "no path joins labels " + std::to_string(k) + " and " + std::to_string(l));
  }
  std::vector<bool> parity_all;
  const auto per_line = line_parities(graph, pairs, parity_all);
  return parity_report(per_line, parity_all, cover, *gamma, k, l);
}

ParitySweep sweep_intersection_parity(const PlanarGraph& graph, const std::vector<CanonicalPair>& pairs) {
  const std::vector<CanonicalPair> ordered = cyclic_order(graph, pairs);
  const std::size_t n2 = ordered.size();
  std::vector<bool> parity_all;
  const auto per_line = line_parities(graph, ordered, parity_all);
  std::vector<std::size_t> label(graph.vertex_count(), 0);
  for (std::size_t j = 0; j < n2; ++j) label[ordered[j].site] = j + 1;
  ParitySweep sweep;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n2); ++mask) {
    MonomerSet m1;
    MonomerSet m2;
    for (std::size_t j = 0; j < n2; ++j) {
      (mask >> j & 1 ? m1 : m2).sites.push_back(ordered[j].site);
    }
    if ((graph.vertex_count() - m1.size()) % 2 != 0) continue;
    for_each_double_cover(graph, m1, m2, [&](const DoubleCover& cover) {
      ++sweep.covers;
      const LoopPathDecomposition d = overlay(graph, cover);
      for (const OpenPath& path : d.open_paths) {
        ++sweep.checks;
        if (!parity_report(per_line, parity_all, cover, path, label[path.front()], label[path.back()]).equal) {
          ++sweep.failures;
        }
      }
    });
  }
  return sweep;
}

}  // namespace dimerlab
