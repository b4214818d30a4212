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

#include "dimerlab/pfaffian.hpp"

#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

void require_even_skew(const SkewMatrix& a) {
  if (a.dimension() % 2 != 0) {
    throw Error(ErrorCode::kOddDimension, "dimension " + std::to_string(a.dimension()) + " is odd");
  }
  if (!a.is_skew()) throw Error(ErrorCode::kNotSkew, "matrix is not skew-symmetric");
}

Scalar expand_first_row(const SkewMatrix& a, std::vector<std::size_t>& remaining) {
  if (remaining.empty()) return Scalar(1);
  const std::size_t first = remaining.front();
  Scalar total(0);
  for (std::size_t pos = 1; pos < remaining.size(); ++pos) {
    const std::size_t j = remaining[pos];
    const Scalar& entry = a.at(first, j);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t q = 1; q < remaining.size(); ++q) {
      if (q != pos) rest.push_back(remaining[q]);
    }
    Scalar minor = expand_first_row(a, rest);
    if (minor.is_zero()) continue;
    if (pos % 2 == 1) {
      total += entry * minor;
    } else {
      total -= entry * minor;
    }
  }
  return total;
}

std::size_t bit_size(const Scalar& s) {
  auto size = [](const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  return size(s.re()) + size(s.im());
}

void swap_index(SkewMatrix& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.dimension();
  for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, p), a.at(r, q));
  for (std::size_t c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(q, c));
}

}  // namespace

void SkewMatrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  at(i, j) = value;
  at(j, i) = -value;
}

bool SkewMatrix::is_skew() const {
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < dimension_; ++j) {
      if (at(i, j) != -at(j, i)) return false;
    }
  }
  return true;
}

Scalar pfaffian(const SkewMatrix& a) {
  require_even_skew(a);
  if (a.dimension() <= kPairingSumMaxDimension) return pfaffian_by_pairings(a);
  return pfaffian_by_elimination(a);
}

Scalar pfaffian_by_pairings(const SkewMatrix& a) {
  require_even_skew(a);
  std::vector<std::size_t> all(a.dimension());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return expand_first_row(a, all);
}

Scalar pfaffian_by_elimination(SkewMatrix a) {
  require_even_skew(a);
  const std::size_t n = a.dimension();
  Scalar result(1);
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // Smallest nonzero entry of row k; keeps fill-in local for banded inputs.
    std::size_t pivot = n;
    std::size_t best = 0;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a.at(k, j).is_zero()) continue;
      const std::size_t size = bit_size(a.at(k, j));
      if (pivot == n || size < best) {
        pivot = j;
        best = size;
      }
    }
    if (pivot == n) return Scalar(0);
    if (pivot != k + 1) {
      swap_index(a, k + 1, pivot);
      result = -result;
    }
    const Scalar pivot_value = a.at(k, k + 1);
    result *= pivot_value;

    support.clear();
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!a.at(k, i).is_zero() || !a.at(k + 1, i).is_zero()) support.push_back(i);
    }
    // B_ij = A_ij + (A_kj A_{k+1,i} - A_ki A_{k+1,j}) / a  on the support.
    for (std::size_t s = 0; s < support.size(); ++s) {
      const std::size_t i = support[s];
      for (std::size_t t = s + 1; t < support.size(); ++t) {
        const std::size_t j = support[t];
        Scalar update = a.at(k, j) * a.at(k + 1, i) - a.at(k, i) * a.at(k + 1, j);
        if (update.is_zero()) continue;
        update /= pivot_value;
        a.set(i, j, a.at(i, j) + update);
      }
    }
  }
  return result;
}

}  // namespace dimerlab
