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

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dimerlab/matchings.hpp"
#include "dimerlab/planar_graph.hpp"
#include "dimerlab/weights.hpp"

namespace dimerlab {

// omega1 in Omega(M1), omega2 in Omega(M2), with M1 and M2 disjoint.
struct DoubleCover {
  Matching omega1;
  Matching omega2;

  const MonomerSet& m1() const { return omega1.depleted_by; }
  const MonomerSet& m2() const { return omega2.depleted_by; }
};

struct SimpleLoop {
  std::vector<VertexId> vertices;  // cyclic, starts at the smallest vertex
  std::vector<EdgeId> edges;       // edges[i] joins vertices[i] and vertices[i+1 mod n]
};

struct OpenPath {
  std::vector<VertexId> vertices;  // from the smaller endpoint to the larger
  std::vector<EdgeId> edges;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool connects(VertexId x, VertexId y) const {
    return (front() == x && back() == y) || (front() == y && back() == x);
  }
};

// Gamma(omega^(2)): double edges, alternating simple loops and open paths.
struct LoopPathDecomposition {
  std::vector<EdgeId> double_edges;  // sorted
  std::vector<SimpleLoop> simple_loops;
  std::vector<OpenPath> open_paths;

  std::size_t n_s() const { return simple_loops.size(); }
  const OpenPath* path_between(VertexId x, VertexId y) const;
  // The other endpoint of the path starting at monomer x.
  VertexId partner(VertexId x) const;
};

// Unordered site pairs {x_j, y_j} that must be joined by a path of Gamma.
using ConnectionSpec = std::vector<std::pair<VertexId, VertexId>>;

// Throws kOverlappingMonomers when M1 and M2 intersect.
void check_disjoint(const MonomerSet& m1, const MonomerSet& m2);

// Paths are traced from monomers in increasing order, then loops from the
// smallest vertex not yet visited.
LoopPathDecomposition overlay(const PlanarGraph& graph, const DoubleCover& cover);

// 2^{n_s}.
std::uint64_t class_size(const LoopPathDecomposition& decomposition);

bool satisfies(const LoopPathDecomposition& decomposition, const ConnectionSpec& c);

// Visits Omega(M1) x Omega(M2); the outer loop runs over Omega(M1).
void for_each_double_cover(const PlanarGraph& graph, const MonomerSet& m1, const MonomerSet& m2,
                           const std::function<void(const DoubleCover&)>& visit,
                           const EnumerationOptions& options = {});

// Z^(2)(M1, M2; C): sum of chi(omega1) chi(omega2) over double covers whose
// decomposition joins every pair of C.
Scalar connection_amplitude(const PlanarGraph& graph, const WeightMap& weights,
                            const MonomerSet& m1, const MonomerSet& m2, const ConnectionSpec& c,
                            const EnumerationOptions& options = {});

// (omega1 xor gamma, omega2 xor gamma); the endpoints of gamma change sides.
// Throws kPathNotInDecomposition.
DoubleCover switch_path(const PlanarGraph& graph, const DoubleCover& cover, const OpenPath& gamma);

// Every vertex of G \ (M1 u M2) has degree 2 in the union multigraph, every
// monomer degree 1.
bool degree_formula_holds(const PlanarGraph& graph, const DoubleCover& cover);

// Simple loops have even length; an open path is odd iff both ends lie in the
// same monomer set; the decomposition reproduces the edge multiset.
bool parity_clause_holds(const PlanarGraph& graph, const DoubleCover& cover,
                         const LoopPathDecomposition& decomposition);

struct Lemma1Audit {
  std::uint64_t covers = 0;          // |Omega^(2)(M1, M2)|
  std::uint64_t classes = 0;         // distinct Gamma
  std::uint64_t class_size_sum = 0;  // sum of 2^{n_s} over classes
  std::uint64_t degree_failures = 0;
  std::uint64_t parity_failures = 0;
  std::uint64_t class_size_failures = 0;  // classes whose population differs from 2^{n_s}

  bool ok() const {
    return degree_failures == 0 && parity_failures == 0 && class_size_failures == 0 &&
           class_size_sum == covers;
  }
};

Lemma1Audit audit_lemma1(const PlanarGraph& graph, const MonomerSet& m1, const MonomerSet& m2,
                         const EnumerationOptions& options = {});

struct SwitchingReport {
  Scalar same_side_lhs;   // Z2(M1+{x,y}, M2; x<->y, C)
  Scalar same_side_rhs;   // Z2(M1, M2+{x,y}; x<->y, C)
  Scalar cross_lhs;       // Z2(M1+{x}, M2+{y}; x<->y, C)
  Scalar cross_rhs;       // Z2(M1+{y}, M2+{x}; x<->y, C)
  bool same_side_equal;
  bool cross_equal;
  bool equal() const { return same_side_equal && cross_equal; }
};

// Both sides of each identity by independent enumeration. Throws
// kPrecondition when {x, y} meets M1 u M2.
SwitchingReport verify_switching_I(const PlanarGraph& graph, const WeightMap& weights,
                                   const MonomerSet& m1, const MonomerSet& m2, VertexId x,
                                   VertexId y, const ConnectionSpec& c,
                                   const EnumerationOptions& options = {});

}  // namespace dimerlab
