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

#include "dimerlab/scalar.hpp"

namespace dimerlab {

// Dense skew-symmetric matrix of exact scalars.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::size_t dimension)
      : dimension_(dimension), entries_(dimension * dimension) {}

  std::size_t dimension() const { return dimension_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * dimension_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * dimension_ + j]; }

  // Sets A_ij = value and A_ji = -value.
  void set(std::size_t i, std::size_t j, const Scalar& value);

  bool is_skew() const;

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
    return a.dimension_ == b.dimension_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<Scalar> entries_;
};

// Dimensions up to this use the signed pairing sum.
inline constexpr std::size_t kPairingSumMaxDimension = 12;

// Pfaffian; pairing sum up to kPairingSumMaxDimension, elimination above.
// Throws kOddDimension or kNotSkew.
Scalar pfaffian(const SkewMatrix& a);

// Signed sum over the perfect pairings of {0..2n-1}, expanded recursively
// along the first row.
Scalar pfaffian_by_pairings(const SkewMatrix& a);

// Skew-symmetric congruence elimination with exact pivot selection.
Scalar pfaffian_by_elimination(SkewMatrix a);

}  // namespace dimerlab
