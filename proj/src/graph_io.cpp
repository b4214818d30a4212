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

#include "dimerlab/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

Rational rational_field(const json& object, const char* key, const std::string& where,
                        std::optional<Rational> fallback = std::nullopt) {
  auto it = object.find(key);
  if (it == object.end()) {
    if (fallback) return *fallback;
    fail(where, std::string("missing field '") + key + "'");
  }
  if (it->is_number_integer()) return Rational(it->get<long>());
  if (!it->is_string()) fail(where + "." + key, "expected a \"p/q\" string");
  try {
    return parse_rational(it->get<std::string>());
  } catch (const Error& e) {
    fail(where + "." + key, e.what());
  }
}

Label label_field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) fail(where, std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) fail(where + "." + key, "expected an integer");
  return it->get<Label>();
}

}  // namespace

GraphDocument parse_graph_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("graph file", e.what());
  }
  if (!doc.is_object()) fail("graph file", "top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("graph file", "missing 'vertices' array");
  if (doc.contains("edges") && !doc["edges"].is_array()) fail("graph file", "'edges' must be an array");

  std::vector<VertexSpec> vertices;
  std::set<Label> vertex_ids;
  const json& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_object()) fail(where, "expected an object");
    Label id = label_field(vs[i], "id", where);
    if (!vertex_ids.insert(id).second) fail(where + ".id", "duplicate vertex id " + std::to_string(id));
    vertices.push_back({id, {rational_field(vs[i], "x", where), rational_field(vs[i], "y", where)}});
  }

  std::vector<EdgeSpec> edges;
  std::vector<Scalar> weights;
  std::set<Label> edge_ids;
  if (doc.contains("edges")) {
    const json& es = doc["edges"];
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_object()) fail(where, "expected an object");
      Label id = label_field(es[i], "id", where);
      if (!edge_ids.insert(id).second) fail(where + ".id", "duplicate edge id " + std::to_string(id));
      Label u = label_field(es[i], "u", where);
      Label v = label_field(es[i], "v", where);
      if (!vertex_ids.count(u) || !vertex_ids.count(v)) fail(where, "endpoint is not a vertex id");
      edges.push_back({id, u, v});
      weights.emplace_back(rational_field(es[i], "w_re", where, Rational(1)),
                           rational_field(es[i], "w_im", where, Rational(0)));
    }
  }
  PlanarGraph graph = build_graph(vertices, edges);
  return {std::move(graph), WeightMap(std::move(weights))};
}

PlanarGraph parse_graph(const std::string& text) { return parse_graph_document(text).graph; }

std::string serialize_graph(const PlanarGraph& graph) {
  return serialize_graph(graph, WeightMap::uniform(graph));
}

std::string serialize_graph(const PlanarGraph& graph, const WeightMap& weights) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : graph.vertices()) {
    doc["vertices"].push_back({{"id", v.label},
                               {"x", rational_to_string(v.position.x)},
                               {"y", rational_to_string(v.position.y)}});
  }
  doc["edges"] = json::array();
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    doc["edges"].push_back({{"id", edge.label},
                            {"u", graph.vertex(edge.u).label},
                            {"v", graph.vertex(edge.v).label},
                            {"w_re", rational_to_string(weights[e].re())},
                            {"w_im", rational_to_string(weights[e].im())}});
  }
  return doc.dump(1) + "\n";
}

GraphDocument read_graph_file(const std::string& path) { return parse_graph_document(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  out << text;
}

WeightMap restrict_weights(const PlanarGraph& host, const WeightMap& weights, const PlanarGraph& sub) {
  std::vector<Scalar> values;
  values.reserve(sub.edge_count());
  for (const Edge& e : sub.edges()) values.push_back(weights[host.edge_by_label(e.label)]);
  return WeightMap(std::move(values));
}

}  // namespace dimerlab
