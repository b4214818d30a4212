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

// Acceptance run: one line per criterion. Exit status is nonzero when a
// criterion fails that is not listed as blocked below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dimerlab/fixtures.hpp"
#include "dimerlab/identities.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/suites.hpp"
#include "dimerlab/sweeps.hpp"

using namespace dimerlab;

namespace {

// Pinned tolerances and sizes.
constexpr std::size_t kThm1Fixtures = 200;
constexpr std::size_t kThm1MaxVertices = 16;
constexpr std::size_t kThm1MinSixSite = 20;
constexpr std::size_t kGaugeMinPairs = 100;
constexpr double kStripTolerance = 0.2;
constexpr std::size_t kStripWidth = 16;
constexpr std::size_t kStripHeight = 8;

struct Line {
  int id;
  bool pass;
  bool blocked;
  std::string text;
};

std::vector<Line> lines;

void report(int id, bool pass, const std::string& text, bool blocked = false) {
  lines.push_back({id, pass, blocked, text});
  std::cout << (pass ? "PASS" : (blocked ? "FAIL (blocked)" : "FAIL")) << "  C" << id << "  " << text << std::endl;
}

SuiteResult suite(const std::string& name, std::size_t count = 0) {
  SuiteOptions options;
  options.fixture_count = count;
  options.max_vertices = kThm1MaxVertices;
  return run_suite(name, options);
}

std::size_t rows_with_prefix(const SuiteResult& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& row : r.rows) n += row.check.rfind(prefix, 0) == 0;
  return n;
}

std::string counts(const SuiteResult& r) {
  return std::to_string(r.rows.size() - r.failures()) + "/" + std::to_string(r.rows.size()) + " rows";
}

void criterion1() {
  auto r = suite("thm1", kThm1Fixtures);
  std::set<std::string> fixtures;
  for (const auto& row : r.rows) fixtures.insert(row.fixture);
  const std::size_t four = rows_with_prefix(r, "S4 ");
  const std::size_t six = rows_with_prefix(r, "S6 ");
  const bool ok = r.passed() && fixtures.size() >= kThm1Fixtures && six >= kThm1MinSixSite;
  report(1, ok,
         "boundary Pfaffian exact: " + counts(r) + ", " + std::to_string(fixtures.size()) + " fixtures, " +
             std::to_string(four) + " four-site, " + std::to_string(six) + " six-site");
}

void criterion2() {
  auto r = suite("thm2");
  bool has_4x4 = false;
  bool has_4x6 = false;
  for (const auto& row : r.rows) {
    has_4x4 |= row.fixture.find("grid4x4") != std::string::npos;
    has_4x6 |= row.fixture.find("grid4x6") != std::string::npos;
  }
  const std::size_t pf = rows_with_prefix(r, "pfaffian ");
  const std::size_t rex = rows_with_prefix(r, "R-expansion ");
  report(2, r.passed() && has_4x4 && has_4x6 && pf == rex && pf > 0,
         "order-disorder Pfaffian exact: " + counts(r) + " (" + std::to_string(pf) + " Pf, " + std::to_string(rex) +
             " R-expansion)");
}

// Four sites of the free 4x4 grid, at least one interior, not all on one face,
// with S4 different from every signed combination of the pairing terms.
void criterion3() {
  auto doc = grid_graph(4, 4);
  const auto& g = doc.graph;
  PartitionTable table(g, doc.weights);
  auto interior = [](VertexId v) { return v == 5 || v == 6 || v == 9 || v == 10; };
  auto on_one_face = [&](const std::vector<VertexId>& s) {
    for (FaceId f = 0; f < g.faces().size(); ++f) {
      auto fv = face_vertices(g, f);
      bool all = true;
      for (VertexId v : s) all &= std::find(fv.begin(), fv.end(), v) != fv.end();
      if (all) return true;
    }
    return false;
  };
  std::size_t witnesses = 0;
  std::string first;
  for (VertexId a = 0; a < 16; ++a)
    for (VertexId b = a + 1; b < 16; ++b)
      for (VertexId c = b + 1; c < 16; ++c)
        for (VertexId d = c + 1; d < 16; ++d) {
          std::vector<VertexId> s{a, b, c, d};
          if (!(interior(a) || interior(b) || interior(c) || interior(d)) || on_one_face(s)) continue;
          const Scalar s4 = table.correlation(MonomerSet{s});
          auto m = two_point_matrix(table, s);
          const Scalar t1 = m.at(0, 1) * m.at(2, 3);
          const Scalar t2 = m.at(0, 2) * m.at(1, 3);
          const Scalar t3 = m.at(0, 3) * m.at(1, 2);
          bool matches = false;
          for (int mask = 0; mask < 8; ++mask) {
            Scalar sum = (mask & 1 ? -t1 : t1) + (mask & 2 ? -t2 : t2) + (mask & 4 ? -t3 : t3);
            matches |= sum == s4;
          }
          if (matches) continue;
          if (witnesses++ == 0) {
            first = "sites {" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                    std::to_string(d) + "}: S4=" + s4.to_string() + ", Pf(S2)=" + pfaffian(m).to_string();
          }
        }
  report(3, witnesses > 0, "bulk witness on 4x4: " + first + " (" + std::to_string(witnesses) + " witnesses)");
}

void criterion4() {
  auto r = suite("lemma1");
  report(4, r.passed(), "loop/path decomposition, zero exceptions: " + counts(r));
}

void criterion5() {
  auto a = suite("switching1");
  auto b = suite("switching2");
  report(5, a.passed() && b.passed(), "switching identities: plain " + counts(a) + ", signed " + counts(b));
}

void criterion6() {
  auto g = suite("gauge");
  std::size_t odd = 0;
  std::size_t even = 0;
  for (const auto& row : g.rows) {
    const std::size_t size = std::stoul(row.check.substr(4));
    (size % 2 ? odd : even) += 1;
  }
  auto h = suite("homotopy");
  const bool ok = g.passed() && h.passed() && g.rows.size() >= kGaugeMinPairs && odd > 0 && even > 0;
  report(6, ok,
         "gauge " + counts(g) + " (" + std::to_string(odd) + " odd |B|, " + std::to_string(even) +
             " even |B|); homotopy sign per swept site " + counts(h));
}

void criterion7() {
  auto r = suite("parity");
  std::uint64_t checks = 0;
  for (const auto& row : r.rows) checks += std::stoull(row.rhs.to_string());
  report(7, r.passed(), "intersection parity on every double cover: " + counts(r) + ", " + std::to_string(checks) +
                            " path checks");
}

void criterion8() {
  auto r = suite("pathgas");
  const std::size_t gas = rows_with_prefix(r, "loop gas ");
  const std::size_t two = rows_with_prefix(r, "two-point ");
  const std::size_t four = rows_with_prefix(r, "four-point ");
  report(8, r.passed() && gas > 0 && two > 0 && four > 0,
         "loop gas and path representations: " + counts(r) + " (" + std::to_string(gas) + " loop gas, " +
             std::to_string(two) + " two-point, " + std::to_string(four) + " four-point)");
}

void criterion9() {
  bool ok = true;
  std::size_t grids = 0;
  for (std::size_t rows = 1; rows <= 6; ++rows) {
    for (std::size_t cols = 2; cols <= 6; ++cols) {
      if (rows * cols % 2) continue;
      auto b = bench_grid(rows, cols);
      ++grids;
      Scalar raw = b.raw_pfaffian;
      if (raw.re() < 0) raw = -raw;
      ok &= b.enumerated && raw == b.z_enum && b.z_pfaffian == b.z_enum;
    }
  }
  const Scalar z4 = bench_grid(4, 4).z_enum;
  const Scalar z6 = bench_grid(6, 6).z_enum;
  ok &= z4 == Scalar(36) && z6 == Scalar(6728);
  report(9, ok, "|Pf| = Z_enum on " + std::to_string(grids) + " grids up to 6x6; Z(4x4)=" + z4.to_string() +
                    ", Z(6x6)=" + z6.to_string());
}

void criterion10() {
  auto rows = ruelle_sweep(kStripWidth, kStripHeight, {1, 2, 3, 4, 5, 6});
  bool even_zero = true;
  std::vector<double> d1;
  const BoundaryCorrelationRow* target = nullptr;
  for (const auto& row : rows) {
    if (row.separation % 2 == 0) even_zero &= row.s2.is_zero();
    if (row.separation == 1) {
      d1.push_back(row.relative_deviation);
      if (row.size.width == kStripWidth && row.size.height == kStripHeight) target = &row;
    }
  }
  bool monotone = d1.size() >= 2;
  for (std::size_t i = 1; i < d1.size(); ++i) monotone &= d1[i] < d1[i - 1];
  std::ostringstream trend;
  for (std::size_t i = 0; i < d1.size(); ++i) trend << (i ? " > " : "") << d1[i];
  const bool within = target != nullptr && target->relative_deviation <= kStripTolerance;
  std::ostringstream text;
  if (target != nullptr) {
    text << "16x8 d=1: S2=" << target->s2.to_decimal() << " sign " << (target->sign > 0 ? "+" : "-")
         << ", deviation from 2/pi " << target->relative_deviation << " (tolerance " << kStripTolerance << ")";
  }
  text << "; even d exactly zero: " << (even_zero ? "yes" : "no") << "; d=1 deviation by size: " << trend.str()
       << (monotone ? " (shrinking)" : " (not shrinking)");
  // The lattice value at d=1 settles near 0.31, not 2/pi; see README.
  report(10, within && even_zero && monotone, text.str(), !within && even_zero && monotone);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::size_t passed = 0;
  std::size_t blocked = 0;
  std::size_t failed = 0;
  for (const auto& l : lines) {
    if (l.pass) {
      ++passed;
    } else if (l.blocked) {
      ++blocked;
    } else {
      ++failed;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << passed << " passed, " << blocked << " blocked, " << failed << " failed (" << seconds << " s)"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
