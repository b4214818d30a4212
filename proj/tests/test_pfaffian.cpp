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

#include "doctest.h"
#include "dimerlab/error.hpp"
#include "dimerlab/pfaffian.hpp"
#include "support.hpp"

using namespace dimerlab;

TEST_SUITE("pfaffian") {

TEST_CASE("small closed forms") {
  SkewMatrix a(2);
  a.set(0, 1, Scalar(5));
  CHECK(a.at(1, 0) == Scalar(-5));
  CHECK(pfaffian(a) == Scalar(5));
  SkewMatrix b(4);
  b.set(0, 1, Scalar(2));
  b.set(0, 2, Scalar(3));
  b.set(0, 3, Scalar(5));
  b.set(1, 2, Scalar(7));
  b.set(1, 3, Scalar(11));
  b.set(2, 3, Scalar(13));
  // a01 a23 - a02 a13 + a03 a12
  CHECK(pfaffian_by_pairings(b) == Scalar(2 * 13 - 3 * 11 + 5 * 7));
  CHECK(pfaffian_by_elimination(b) == Scalar(2 * 13 - 3 * 11 + 5 * 7));
  CHECK(pfaffian(SkewMatrix(0)) == Scalar(1));
}

TEST_CASE("pairings agree with elimination") {
  std::mt19937_64 rng(2);
  for (std::size_t n = 2; n <= 10; n += 2) {
    for (int t = 0; t < 6; ++t) {
      auto a = dimerlab::testing::random_skew(n, rng, t % 2 == 1);
      CHECK(pfaffian_by_pairings(a) == pfaffian_by_elimination(a));
    }
  }
}

TEST_CASE("square equals the determinant") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 16; n += 2) {
    auto a = dimerlab::testing::random_skew(n, rng, n % 4 == 0);
    const Scalar pf = pfaffian(a);
    CHECK(pf * pf == dimerlab::testing::determinant(a));
  }
}

TEST_CASE("sparse and singular matrices") {
  std::mt19937_64 rng(4);
  SkewMatrix a(8);
  for (std::size_t i = 0; i + 1 < 8; ++i) a.set(i, i + 1, Scalar(static_cast<long>(i + 1)));
  CHECK(pfaffian_by_elimination(a) == pfaffian_by_pairings(a));
  CHECK(pfaffian(a) == Scalar(1 * 3 * 5 * 7));
  SkewMatrix z(6);
  z.set(0, 1, Scalar(1));
  z.set(2, 3, Scalar(1));
  CHECK(pfaffian_by_elimination(z) == Scalar(0));
  CHECK(pfaffian_by_pairings(z) == Scalar(0));
}

TEST_CASE("rejects bad input") {
  try {
    pfaffian(SkewMatrix(3));
    FAIL("odd");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddDimension);
  }
  SkewMatrix a(2);
  a.at(0, 1) = Scalar(1);
  a.at(1, 0) = Scalar(1);
  CHECK_FALSE(a.is_skew());
  try {
    pfaffian(a);
    FAIL("not skew");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotSkew);
  }
}

}  // TEST_SUITE
