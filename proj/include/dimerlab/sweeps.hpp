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
#include <string>
#include <utility>
#include <vector>

#include "dimerlab/scalar.hpp"

namespace dimerlab {

struct StripSize {
  std::size_t width;   // columns
  std::size_t height;  // rows
};

// Widths 4, 8, 12, ... with height width / 2, bounded by the maxima.
std::vector<StripSize> strip_sweep_sizes(std::size_t max_width, std::size_t max_height);

struct BoundaryCorrelationRow {
  StripSize size;
  std::size_t separation;
  std::size_t first_column;  // sites on the bottom row, centred
  Scalar s2;
  double asymptotic;  // 2 / (pi d) for odd d, 0 for even d
  double relative_deviation;  // | |S2| - asymptotic | / asymptotic; NaN for even d
  int sign;  // sign of S2
};

// Exact S_2 for two bottom-row sites at distance d, via the Pfaffian path.
BoundaryCorrelationRow boundary_correlation(const StripSize& size, std::size_t separation);

std::vector<BoundaryCorrelationRow> ruelle_sweep(std::size_t max_width, std::size_t max_height,
                                                 const std::vector<std::size_t>& separations);

std::string ruelle_csv(const std::vector<BoundaryCorrelationRow>& rows);

struct BenchRow {
  std::size_t rows;
  std::size_t cols;
  std::size_t vertices;
  bool enumerated;  // false when the size guard skipped enumeration
  Scalar z_enum;
  Scalar z_pfaffian;
  Scalar raw_pfaffian;  // Pf of the Kasteleyn matrix before sign calibration
  double enum_ms;
  double pfaffian_ms;
};

BenchRow bench_grid(std::size_t rows, std::size_t cols);
std::string bench_csv(const std::vector<BenchRow>& rows);

// "2x2,4x4" -> {{2,2},{4,4}}. Throws kParseError.
std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text);
// "1,3,5" -> {1,3,5}. Throws kParseError.
std::vector<std::size_t> parse_list(const std::string& text);

}  // namespace dimerlab
