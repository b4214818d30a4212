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

#include <algorithm>

#include "doctest.h"
#include "dimerlab/error.hpp"
#include "dimerlab/geometry.hpp"
#include "dimerlab/graph_io.hpp"
#include "dimerlab/planar_graph.hpp"
#include "dimerlab/scalar.hpp"
#include "support.hpp"

using namespace dimerlab;
using dimerlab::testing::make_graph;
using dimerlab::testing::pt;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kPrecondition;
}

}  // namespace

TEST_SUITE("planar-core") {

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::kParseError);
  Scalar z(Rational(1, 2), Rational(-3, 4));
  CHECK(parse_scalar(z.to_string()) == z);
  CHECK((z * z.conj()).re() == z.norm());
  CHECK(code_of([] { Scalar(1) / Scalar(0); }) == ErrorCode::kPrecondition);
}

TEST_CASE("segment classification") {
  CHECK(classify_segments(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)) == Contact::kProper);
  CHECK(classify_segments(pt(0, 0), pt(1, 1), pt(1, 1), pt(2, 0)) == Contact::kTouch);
  CHECK(classify_segments(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)) == Contact::kTouch);
  CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)) == Contact::kNone);
  CHECK(crossing_parameter(pt(0, 0), pt(4, 0), pt(1, -1), pt(1, 1)) == Rational(1, 4));
  std::vector<Point> square{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  CHECK(twice_signed_area(square) == Rational(8));
  CHECK(winding_number(square, pt(1, 1)) == 1);
  CHECK(winding_number(square, pt(3, 1)) == 0);
  std::reverse(square.begin(), square.end());
  CHECK(winding_number(square, pt(1, 1)) == -1);
}

TEST_CASE("faces of a square with a diagonal") {
  auto g = make_graph({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(g.faces().size() == 3);
  std::size_t outer = 0;
  std::size_t darts = 0;
  for (const Face& f : g.faces()) {
    outer += f.is_outer;
    darts += f.boundary.size();
  }
  CHECK(outer == 1);
  CHECK(darts == 2 * g.edge_count());
  CHECK(g.face(g.outer_face()).boundary.size() == 4);
  CHECK(locate_face(g, pt(3, 4, 1, 4)) == g.left_face(0));
  CHECK(locate_face(g, pt(5, 1)) == g.outer_face());
  auto order = outer_boundary_order(g);
  CHECK(order.size() == 4);
}

TEST_CASE("rotation is counterclockwise") {
  auto g = make_graph({pt(0, 0), pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}, {{0, 4}, {0, 2}, {0, 1}, {0, 3}});
  std::vector<VertexId> around;
  for (EdgeId e : g.rotation(0)) around.push_back(g.other_end(e, 0));
  CHECK(around == std::vector<VertexId>{1, 2, 3, 4});
}

TEST_CASE("Euler formula on random fixtures") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto doc = dimerlab::testing::fixture(7, i, 16);
    const auto& g = doc.graph;
    REQUIRE(g.is_connected());
    CHECK(g.vertex_count() - g.edge_count() + g.faces().size() == 2);
    CHECK(g.vertex_count() % 2 == 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(g.face_of({e, true}) < g.faces().size());
    }
  }
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { make_graph({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {{0, 2}, {1, 3}}); }) ==
        ErrorCode::kEdgeCrossing);
  CHECK(code_of([] { make_graph({pt(0, 0), pt(2, 0), pt(1, 0)}, {{0, 1}}); }) == ErrorCode::kEdgeCrossing);
  CHECK(code_of([] { make_graph({pt(0, 0), pt(0, 0)}, {}); }) == ErrorCode::kDuplicateCoordinate);
  CHECK(code_of([] { make_graph({pt(0, 0), pt(1, 0)}, {{0, 1}, {1, 0}}); }) == ErrorCode::kNonSimple);
  CHECK(code_of([] { make_graph({pt(0, 0), pt(1, 0)}, {{0, 0}}); }) == ErrorCode::kNonSimple);
  CHECK(code_of([] { make_graph({pt(0, 0), pt(1, 0)}, {{0, 5}}); }) == ErrorCode::kUnknownVertex);
  auto split = make_graph({pt(0, 0), pt(1, 0), pt(5, 0), pt(6, 0)}, {{0, 1}, {2, 3}});
  CHECK_FALSE(split.is_connected());
  CHECK(split.component_count() == 2);
  CHECK(code_of([&] { outer_boundary_order(split); }) == ErrorCode::kDisconnected);
  auto g = dimerlab::testing::four_cycle();
  CHECK(code_of([&] { g.edge_by_label(99); }) == ErrorCode::kUnknownEdge);
  CHECK(code_of([&] { validate_monomers(g, MonomerSet{{0, 0}}); }) == ErrorCode::kPrecondition);
}

TEST_CASE("graph files round trip") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto doc = dimerlab::testing::fixture(3, i);
    const std::string text = serialize_graph(doc.graph, doc.weights);
    auto back = parse_graph_document(text);
    CHECK(back.weights == doc.weights);
    CHECK(serialize_graph(back.graph, back.weights) == text);
  }
  CHECK(code_of([] { parse_graph("{"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_graph("{\"edges\": []}"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_graph(R"({"vertices":[{"id":0,"x":"1/0","y":"0"}],"edges":[]})"); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("depletion keeps labels") {
  auto doc = grid_graph(2, 3);
  auto sub = deplete(doc.graph, MonomerSet{{0, 1}});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edge_count() == 3);
  auto w = restrict_weights(doc.graph, doc.weights, sub);
  CHECK(w.size() == sub.edge_count());
  for (EdgeId e = 0; e < sub.edge_count(); ++e) {
    const Label l = sub.edge(e).label;
    CHECK(w[e] == doc.weights[doc.graph.edge_by_label(l)]);
  }
}

}  // TEST_SUITE
