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

#include "dimerlab/sweeps.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/suites.hpp"

namespace dimerlab {
namespace {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

std::size_t parse_count(const std::string& token, const std::string& text) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kParseError, "cannot parse '" + text + "'");
  }
  return std::stoul(token);
}

template <typename F>
double milliseconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<StripSize> strip_sweep_sizes(std::size_t max_width, std::size_t max_height) {
  std::vector<StripSize> sizes;
  for (std::size_t w = 4; w <= max_width && w / 2 <= max_height; w += 4) sizes.push_back({w, w / 2});
  return sizes;
}

BoundaryCorrelationRow boundary_correlation(const StripSize& size, std::size_t separation) {
  if (separation == 0 || separation >= size.width) {
    throw Error(ErrorCode::kInvalidSize, "separation must lie in 1.." + std::to_string(size.width - 1));
  }
  const GraphDocument doc = grid_graph(size.height, size.width);
  const Scalar z = fast_partition_function(doc.graph, doc.weights);
  if (z.is_zero()) throw Error(ErrorCode::kZeroPartitionFunction, "Z_{G,K} = 0");
  BoundaryCorrelationRow row;
  row.size = size;
  row.separation = separation;
  row.first_column = (size.width - 1 - separation) / 2;
  const MonomerSet sites{{row.first_column, row.first_column + separation}};
  const PlanarGraph sub = deplete(doc.graph, sites);
  row.s2 = fast_partition_function(sub, restrict_weights(doc.graph, doc.weights, sub)) / z;
  const double value = row.s2.re().get_d();
  row.sign = sgn(row.s2.re());
  if (separation % 2 == 1) {
    row.asymptotic = 2.0 / (std::numbers::pi * static_cast<double>(separation));
    row.relative_deviation = std::abs(std::abs(value) - row.asymptotic) / row.asymptotic;
  } else {
    row.asymptotic = 0.0;
    row.relative_deviation = std::nan("");
  }
  return row;
}

std::vector<BoundaryCorrelationRow> ruelle_sweep(std::size_t max_width, std::size_t max_height,
                                                 const std::vector<std::size_t>& separations) {
  std::vector<BoundaryCorrelationRow> rows;
  for (const StripSize& size : strip_sweep_sizes(max_width, max_height)) {
    for (std::size_t d : separations) {
      if (d >= size.width) continue;
      rows.push_back(boundary_correlation(size, d));
    }
  }
  return rows;
}

std::string ruelle_csv(const std::vector<BoundaryCorrelationRow>& rows) {
  std::string out = "width,height,separation,first_column,s2,s2_decimal,asymptotic,relative_deviation,sign\n";
  for (const auto& r : rows) {
    out += std::to_string(r.size.width) + ',' + std::to_string(r.size.height) + ',' + std::to_string(r.separation) +
           ',' + std::to_string(r.first_column) + ',' + r.s2.to_string() + ',' + r.s2.to_decimal() + ',' +
           format_double(r.asymptotic) + ',' + format_double(r.relative_deviation) + ',' +
           (r.sign > 0 ? "+" : r.sign < 0 ? "-" : "0") + '\n';
  }
  return out;
}

BenchRow bench_grid(std::size_t rows, std::size_t cols) {
  const GraphDocument doc = grid_graph(rows, cols);
  BenchRow row{rows, cols, doc.graph.vertex_count(), false, {}, {}, {}, 0.0, 0.0};
  const EnumerationOptions options;
  if (doc.graph.vertex_count() <= kEnumerationVertexLimit || options.force_large) {
    row.enumerated = true;
    row.enum_ms = milliseconds([&] { row.z_enum = partition_function(doc.graph, doc.weights, {}, options); });
  }
  row.pfaffian_ms = milliseconds([&] { row.z_pfaffian = fast_partition_function(doc.graph, doc.weights); });
  if (doc.graph.is_connected()) {
    row.raw_pfaffian = pfaffian(kasteleyn_matrix(doc.graph, doc.weights, fkt_orientation(doc.graph)));
  } else {
    row.raw_pfaffian = row.z_pfaffian;
  }
  return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "size,vertices,z_enum,z_pfaffian,abs_pfaffian_equal,enum_ms,pfaffian_ms\n";
  for (const auto& r : rows) {
    const std::string size = std::to_string(r.rows) + "x" + std::to_string(r.cols);
    const bool equal = r.enumerated && r.raw_pfaffian.norm() == r.z_enum.norm() && r.z_pfaffian == r.z_enum;
    out += size + ',' + std::to_string(r.vertices) + ',' + (r.enumerated ? r.z_enum.to_string() : "skipped") + ',' +
           r.z_pfaffian.to_string() + ',' + (r.enumerated ? (equal ? "true" : "false") : "n/a") + ',' +
           (r.enumerated ? format_double(r.enum_ms) : "") + ',' + format_double(r.pfaffian_ms) + '\n';
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto x = token.find('x');
    if (x == std::string::npos) throw Error(ErrorCode::kParseError, "size '" + token + "' is not RxC");
    sizes.emplace_back(parse_count(token.substr(0, x), token), parse_count(token.substr(x + 1), token));
  }
  if (sizes.empty()) throw Error(ErrorCode::kParseError, "empty size list");
  return sizes;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(parse_count(token, text));
  if (values.empty()) throw Error(ErrorCode::kParseError, "empty list");
  return values;
}

}  // namespace dimerlab
