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

#include <random>
#include <vector>

#include "dimerlab/fixtures.hpp"
#include "dimerlab/graph_io.hpp"
#include "dimerlab/pfaffian.hpp"

namespace dimerlab::testing {

inline Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
inline Point pt(long xn, long xd, long yn, long yd) { return {Rational(xn, xd), Rational(yn, yd)}; }

// Labels equal indices.
inline PlanarGraph make_graph(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < points.size(); ++i) vs.push_back({static_cast<Label>(i), points[i]});
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < edges.size(); ++i) es.push_back({static_cast<Label>(i), edges[i].first, edges[i].second});
  return build_graph(vs, es);
}

// Unit square 0-1-2-3 counterclockwise.
inline PlanarGraph four_cycle() { return make_graph({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

inline WeightMap random_weights(const PlanarGraph& g, std::mt19937_64& rng, bool complex = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Scalar> values;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int n = 0;
    while (n == 0) n = num(rng);
    Rational re(n, den(rng));
    re.canonicalize();
    Rational im(complex ? num(rng) : 0, den(rng));
    im.canonicalize();
    values.emplace_back(re, im);
  }
  return WeightMap(std::move(values));
}

inline SkewMatrix random_skew(std::size_t n, std::mt19937_64& rng, bool complex = false) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  SkewMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational re(num(rng), den(rng));
      re.canonicalize();
      Rational im(complex ? num(rng) : 0, den(rng));
      im.canonicalize();
      a.set(i, j, Scalar(re, im));
    }
  }
  return a;
}

// Determinant by Gaussian elimination over the exact scalars; oracle for Pf^2.
inline Scalar determinant(const SkewMatrix& m) {
  const std::size_t n = m.dimension();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline GraphDocument fixture(std::uint64_t seed, std::uint64_t index, std::size_t max_vertices = 12) {
  auto rng = fixture_engine(seed, index);
  RandomFixtureOptions options;
  options.max_vertices = max_vertices;
  return random_planar_fixture(rng, options);
}

}  // namespace dimerlab::testing
