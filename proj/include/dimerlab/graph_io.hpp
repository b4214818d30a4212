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

#include <string>

#include "dimerlab/planar_graph.hpp"
#include "dimerlab/weights.hpp"

namespace dimerlab {

// A graph file: the embedded graph plus its edge weights (default 1).
struct GraphDocument {
  PlanarGraph graph;
  WeightMap weights;
};

// JSON graph format:
//   {"vertices":[{"id":0,"x":"0/1","y":"0/1"},...],
//    "edges":[{"id":0,"u":0,"v":1,"w_re":"1/1","w_im":"0/1"},...]}
// Throws kParseError with the offending entry, plus the validation errors of
// build_graph.
GraphDocument parse_graph_document(const std::string& text);
PlanarGraph parse_graph(const std::string& text);

std::string serialize_graph(const PlanarGraph& graph);
std::string serialize_graph(const PlanarGraph& graph, const WeightMap& weights);

GraphDocument read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace dimerlab
