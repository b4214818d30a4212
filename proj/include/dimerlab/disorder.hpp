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

#include <cstddef>
#include <vector>

#include "dimerlab/double_dimer.hpp"
#include "dimerlab/geometry.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/planar_graph.hpp"
#include "dimerlab/weights.hpp"

namespace dimerlab {

// A vertex-avoiding polyline in the plane of the embedding. Its end points
// stand for the faces that contain them.
struct DisorderLine {
  std::vector<Point> points;  // at least one
};

// Throws kDegenerateCrossing when a point lies on a vertex or an edge, a
// segment passes through a vertex, or a segment touches an edge without a
// transversal crossing; kPrecondition for an empty polyline.
void validate_line(const PlanarGraph& graph, const DisorderLine& line);

// Number of transversal crossings of the line with each edge.
std::vector<std::size_t> crossing_counts(const PlanarGraph& graph, const DisorderLine& line);

// l*: edges crossed an odd number of times.
EdgeFlipSet l_star(const PlanarGraph& graph, const DisorderLine& line);

// Faces containing the first and the last point.
std::pair<FaceId, FaceId> endpoint_faces(const PlanarGraph& graph, const DisorderLine& line);

// Per-edge parity of the composition T_{l1*} o ... o T_{ln*}.
std::vector<bool> flip_parity(const PlanarGraph& graph, const std::vector<DisorderLine>& lines);

// Parity of the number of crossings between the edges and the lines whose
// combined flip parity is given.
bool odd_intersection(const std::vector<EdgeId>& edges, const std::vector<bool>& parity);

WeightMap apply_flips(const WeightMap& weights, const std::vector<bool>& parity);

// <prod tau_l> = Z_{T K} / Z_K. Throws kZeroPartitionFunction.
Scalar disorder_expectation(const PlanarGraph& graph, const WeightMap& weights,
                            const std::vector<DisorderLine>& lines);
// The same quantity as sum_omega chi_K(omega) (-1)^{(omega|L)} / Z.
Scalar disorder_expectation_signed_sum(const PlanarGraph& graph, const WeightMap& weights,
                                       const std::vector<DisorderLine>& lines);

// Vertices with odd winding number for the closed curve formed by `line`,
// a connector inside the far end face, the reversed `deformed` line, and a
// connector inside the near end face. Throws kPrecondition when the lines do
// not share end faces and kDegenerateCrossing when a connector leaves its face
// or the curve hits a vertex.
std::vector<VertexId> swept_vertices(const PlanarGraph& graph, const DisorderLine& line,
                                     const DisorderLine& deformed);

struct HomotopyReport {
  Scalar original;  // <tau_line>
  Scalar deformed;  // <tau_deformed>
  std::size_t swept;
  bool equal;  // deformed == (-1)^swept * original
};

HomotopyReport homotopy_check(const PlanarGraph& graph, const WeightMap& weights,
                              const DisorderLine& line, const DisorderLine& deformed);

// mu_j = eta_{x_j} tau_{l_j}. The polyline runs from the grand central face
// (first point) to a face adjacent to the site (last point).
struct CanonicalPair {
  VertexId site;
  DisorderLine line;
};

// Returns the grand central face. Throws kNonCanonical when sites repeat,
// first points lie in different faces, a last point's face does not have the
// site on its boundary walk, or two lines meet.
FaceId validate_canonical(const PlanarGraph& graph, const std::vector<CanonicalPair>& pairs);

// Z_{G, T_L K}({x_1..x_2n}) / Z_{G,K}. Throws kZeroPartitionFunction,
// kNonCanonical, kPrecondition for an odd number of pairs.
Scalar mu_correlator(const PlanarGraph& graph, const WeightMap& weights,
                     const std::vector<CanonicalPair>& pairs);

// Position on the grand central boundary walk, measured from the directed
// boundary edge with the smallest edge index.
struct BoundaryPosition {
  std::size_t step;  // index along the walk
  Rational offset;   // in [0, 1); 0 is the tail vertex of the step
};

// Where the line first crosses out of the grand central face. A line that
// never leaves takes the position of its site's first visit on the walk.
BoundaryPosition exit_position(const PlanarGraph& graph, FaceId grand_central,
                               const CanonicalPair& pair);

// Pairs sorted by exit position. Throws kSharedExitPoint, kNonCanonical.
std::vector<CanonicalPair> cyclic_order(const PlanarGraph& graph,
                                        const std::vector<CanonicalPair>& pairs);

// Lines L1 / L2 attached to the monomer sets M1 / M2.
struct SignedAmplitudeSpec {
  MonomerSet m1;
  std::vector<DisorderLine> l1;
  MonomerSet m2;
  std::vector<DisorderLine> l2;
  ConnectionSpec c;
};

// W^(2): sum over Omega(M1) x Omega(M2) satisfying C of
// chi(omega1) (-1)^{(omega1|L1)} chi(omega2) (-1)^{(omega2|L2)}.
Scalar signed_amplitude(const PlanarGraph& graph, const WeightMap& weights,
                        const SignedAmplitudeSpec& spec, const EnumerationOptions& options = {});

// Builds ({p_a : a in first}, {p_b : b not in first}) with labels 1-based.
SignedAmplitudeSpec split_pairs(const std::vector<CanonicalPair>& pairs,
                                const std::vector<std::size_t>& first, const ConnectionSpec& c);

struct SwitchingIIReport {
  Scalar first_lhs;   // W({p1,pk}, rest; x1<->xk)
  Scalar first_rhs;   // (-1)^k W(0, all; x1<->xk)
  bool first_equal;
  Scalar second_lhs;  // W({p1,pk}, rest; x1<->xm, xk<->xl)
  Scalar second_rhs;  // (-1)^{k-l-1} W({p1,pl}, rest; x1<->xm, xk<->xl)
  bool second_equal;
  bool equal() const { return first_equal && second_equal; }
};

// Labels are 1-based positions in the cyclically ordered pairs; k, l, m are
// distinct members of {2..2n}. For 2n = 2 only the first identity is checked
// (l and m are ignored).
SwitchingIIReport verify_switching_II(const PlanarGraph& graph, const WeightMap& weights,
                                      const std::vector<CanonicalPair>& pairs, std::size_t k,
                                      std::size_t l, std::size_t m);

struct IntersectionParityReport {
  int observed;  // (-1)^{(gamma|L)} (-1)^{(omega2|l_k, l_l)}
  int expected;  // (-1)^{k-l-1}
  bool equal;
};

// k and l are 1-based labels. Throws kPrecondition for k == l and
// kNotConnected when the decomposition has no path x_k <-> x_l.
IntersectionParityReport intersection_parity_check(const PlanarGraph& graph,
                                                   const std::vector<CanonicalPair>& pairs,
                                                   const DoubleCover& cover,
                                                   const LoopPathDecomposition& decomposition,
                                                   std::size_t k, std::size_t l);

struct ParitySweep {
  std::uint64_t covers = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

// Every split of the sites into (M1, M2), every double cover, every path of
// its decomposition.
ParitySweep sweep_intersection_parity(const PlanarGraph& graph,
                                      const std::vector<CanonicalPair>& pairs);

}  // namespace dimerlab
