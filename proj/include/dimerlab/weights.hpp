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

#include "dimerlab/planar_graph.hpp"
#include "dimerlab/scalar.hpp"

namespace dimerlab {

// Edge weights K_b, one exact complex-rational value per edge index.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<Scalar> values) : values_(std::move(values)) {}

  static WeightMap uniform(std::size_t edge_count, const Scalar& value = Scalar(1)) {
    return WeightMap(std::vector<Scalar>(edge_count, value));
  }
  static WeightMap uniform(const PlanarGraph& graph, const Scalar& value = Scalar(1)) {
    return uniform(graph.edge_count(), value);
  }

  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](EdgeId e) const { return values_[e]; }
  Scalar& operator[](EdgeId e) { return values_[e]; }
  const std::vector<Scalar>& values() const { return values_; }

  friend bool operator==(const WeightMap& a, const WeightMap& b) { return a.values_ == b.values_; }

 private:
  std::vector<Scalar> values_;
};

// Weights of `sub` inherited from `host` through edge labels.
WeightMap restrict_weights(const PlanarGraph& host, const WeightMap& weights,
                           const PlanarGraph& sub);

}  // namespace dimerlab
