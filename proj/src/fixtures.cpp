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

#include "dimerlab/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>

#include "json.hpp"

#include "dimerlab/error.hpp"
#include "dimerlab/kasteleyn.hpp"

namespace dimerlab {
namespace {

using nlohmann::json;

bool admissible_segment(const std::vector<Point>& points, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        std::size_t a, std::size_t b) {
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (v != a && v != b && on_segment(points[v], points[a], points[b])) return false;
  }
  for (const auto& [c, d] : edges) {
    const bool shared = c == a || c == b || d == a || d == b;
    if (shared) continue;  // collinear overlaps are caught by the vertex test
    if (classify_segments(points[a], points[b], points[c], points[d]) != Contact::kNone) return false;
  }
  return true;
}

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const auto& [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    ++count;
    for (std::size_t w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return count == n;
}

Rational random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> magnitude(1, 9);
  std::bernoulli_distribution negative(0.3);
  Rational w(magnitude(rng), magnitude(rng));
  w.canonicalize();
  return negative(rng) ? Rational(-w) : w;
}

Rational rational_entry(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) throw Error(ErrorCode::kParseError, where + ": expected a \"p/q\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, where + ": " + e.what());
  }
}

const json& lines_array(const json& doc) {
  if (!doc.contains("disorder") || !doc["disorder"].is_object() || !doc["disorder"].contains("lines") ||
      !doc["disorder"]["lines"].is_array()) {
    throw Error(ErrorCode::kParseError, "missing 'disorder.lines' array");
  }
  return doc["disorder"]["lines"];
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("disorder section: ") + e.what());
  }
}

DisorderLine line_from(const json& entry, const std::string& where) {
  if (!entry.is_object() || !entry.contains("points") || !entry["points"].is_array()) {
    throw Error(ErrorCode::kParseError, where + ": missing 'points' array");
  }
  DisorderLine line;
  const json& points = entry["points"];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string at = where + ".points[" + std::to_string(i) + "]";
    if (!points[i].is_array() || points[i].size() != 2) throw Error(ErrorCode::kParseError, at + ": expected [x, y]");
    line.points.push_back({rational_entry(points[i][0], at), rational_entry(points[i][1], at)});
  }
  return line;
}

}  // namespace

GraphDocument grid_graph(std::size_t rows, std::size_t cols, const Scalar& weight) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kInvalidSize, "grid dimensions must be positive");
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      vertices.push_back({static_cast<Label>(r * cols + c), {Rational(static_cast<long>(c)), Rational(static_cast<long>(r))}});
    }
  }
  Label next = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      edges.push_back({next++, static_cast<Label>(r * cols + c), static_cast<Label>(r * cols + c + 1)});
    }
  }
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      edges.push_back({next++, static_cast<Label>(r * cols + c), static_cast<Label>((r + 1) * cols + c)});
    }
  }
  PlanarGraph graph = build_graph(vertices, edges);
  WeightMap weights = WeightMap::uniform(graph, weight);
  return {std::move(graph), std::move(weights)};
}

std::mt19937_64 fixture_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(sequence);
}

GraphDocument random_planar_fixture(std::mt19937_64& rng, const RandomFixtureOptions& options) {
  if (options.min_vertices < 2 || options.max_vertices < options.min_vertices) {
    throw Error(ErrorCode::kInvalidSize, "invalid fixture vertex range");
  }
  const std::size_t lo = (options.min_vertices + 1) / 2;
  const std::size_t hi = options.max_vertices / 2;
  if (hi < lo) throw Error(ErrorCode::kInvalidSize, "no even vertex count in range");
  std::uniform_int_distribution<std::size_t> half(lo, hi);
  std::uniform_int_distribution<int> coordinate(0, options.coordinate_range);
  std::bernoulli_distribution drop(options.deletion_probability);
  std::bernoulli_distribution complex_weights(options.complex_probability);

  while (true) {
    const std::size_t n = 2 * half(rng);
    std::vector<Point> points;
    while (points.size() < n) {
      Point p{Rational(coordinate(rng), 2), Rational(coordinate(rng), 2)};
      p.x.canonicalize();
      p.y.canonicalize();
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) candidates.emplace_back(a, b);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    auto length = [&](const std::pair<std::size_t, std::size_t>& e) {
      const Rational dx = points[e.first].x - points[e.second].x;
      const Rational dy = points[e.first].y - points[e.second].y;
      return Rational(dx * dx + dy * dy);
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto& a, const auto& b) { return length(a) < length(b); });
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : candidates) {
      if (admissible_segment(points, edges, a, b)) edges.emplace_back(a, b);
    }
    if (!connected(n, edges)) continue;
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = edges.size(); i-- > 0;) {
      if (!drop(rng)) continue;
      auto trial = edges;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (connected(n, trial)) edges = std::move(trial);
    }
    std::sort(edges.begin(), edges.end());

    std::vector<VertexSpec> vertex_specs;
    for (std::size_t v = 0; v < n; ++v) vertex_specs.push_back({static_cast<Label>(v), points[v]});
    std::vector<EdgeSpec> edge_specs;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      edge_specs.push_back({static_cast<Label>(e), static_cast<Label>(edges[e].first),
                            static_cast<Label>(edges[e].second)});
    }
    PlanarGraph graph = build_graph(vertex_specs, edge_specs);
    const bool complex = complex_weights(rng);
    std::vector<Scalar> values;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      Rational re = random_weight(rng);
      Rational im = complex ? random_weight(rng) : Rational(0);
      values.emplace_back(re, im);
    }
    WeightMap weights(std::move(values));
    if (fast_partition_function(graph, weights).is_zero()) continue;
    return {std::move(graph), std::move(weights)};
  }
}

std::vector<DisorderLine> parse_disorder_lines(const std::string& text) {
  const json doc = parse_json(text);
  const json& lines = lines_array(doc);
  std::vector<DisorderLine> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out.push_back(line_from(lines[i], "disorder.lines[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<CanonicalPair> parse_canonical_pairs(const PlanarGraph& graph, const std::string& text) {
  const json doc = parse_json(text);
  const json& lines = lines_array(doc);
  std::vector<CanonicalPair> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "disorder.lines[" + std::to_string(i) + "]";
    if (!lines[i].is_object() || !lines[i].contains("site") || !lines[i]["site"].is_number_integer()) {
      throw Error(ErrorCode::kParseError, where + ": missing integer 'site'");
    }
    out.push_back({graph.vertex_by_label(lines[i]["site"].get<Label>()), line_from(lines[i], where)});
  }
  return out;
}

std::string serialize_with_pairs(const PlanarGraph& graph, const WeightMap& weights,
                                 const std::vector<CanonicalPair>& pairs) {
  json doc = json::parse(serialize_graph(graph, weights));
  json lines = json::array();
  for (const CanonicalPair& p : pairs) {
    json points = json::array();
    for (const Point& q : p.line.points) points.push_back({rational_to_string(q.x), rational_to_string(q.y)});
    lines.push_back({{"site", graph.vertex(p.site).label}, {"points", points}});
  }
  doc["disorder"] = {{"lines", lines}};
  return doc.dump(1) + "\n";
}

PairFixture read_pair_fixture(const std::string& path) {
  const std::string text = read_text_file(path);
  PairFixture fixture{std::filesystem::path(path).stem().string(), parse_graph_document(text), {}};
  fixture.pairs = parse_canonical_pairs(fixture.document.graph, text);
  return fixture;
}

}  // namespace dimerlab
