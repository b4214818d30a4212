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

#include "dimerlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/identities.hpp"
#include "dimerlab/kasteleyn.hpp"

#ifndef DIMERLAB_DATA_DIR
#define DIMERLAB_DATA_DIR "data"
#endif

namespace dimerlab {
namespace {

using RowList = std::vector<SuiteRow>;

std::string fixture_key(const char* prefix, std::size_t index) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%s-%04zu", prefix, index);
  return buffer;
}

std::string labels(const PlanarGraph& graph, const std::vector<VertexId>& sites) {
  std::string out;
  for (VertexId v : sites) {
    if (!out.empty()) out += ' ';
    out += std::to_string(graph.vertex(v).label);
  }
  return out;
}

SuiteRow make_row(std::string fixture, std::string check, Scalar lhs, Scalar rhs) {
  SuiteRow row;
  row.fixture = std::move(fixture);
  row.check = std::move(check);
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  row.equal = row.lhs == row.rhs;
  return row;
}

// Runs body(i) for i < count on a small pool; results concatenated in index order.
RowList parallel_rows(std::size_t count, std::size_t threads, const std::function<RowList(std::size_t)>& body) {
  std::vector<RowList> parts(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        parts[i] = body(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  RowList rows;
  for (auto& part : parts) {
    for (auto& row : part) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<VertexId> pick(std::mt19937_64& rng, std::vector<VertexId> pool, std::size_t count) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<VertexId> all_vertices(const PlanarGraph& graph) {
  std::vector<VertexId> v(graph.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<VertexId> minus(const std::vector<VertexId>& pool, const std::vector<VertexId>& removed) {
  std::vector<VertexId> out;
  for (VertexId v : pool) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
  }
  return out;
}

// Subsets of `items` of the given size in lexicographic index order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i + (k - chosen.size()) <= n; ++i) {
      chosen.push_back(i);
      recurse(i + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
}

struct Context {
  SuiteOptions options;
  std::size_t count(std::size_t fallback) const {
    return options.fixture_count == 0 ? fallback : options.fixture_count;
  }
  GraphDocument fixture(std::size_t index, std::size_t max_vertices) const {
    auto rng = fixture_engine(options.seed, index);
    RandomFixtureOptions fixture_options;
    fixture_options.max_vertices = max_vertices;
    return random_planar_fixture(rng, fixture_options);
  }
  std::mt19937_64 engine(std::size_t index, std::uint64_t salt) const {
    return fixture_engine(options.seed ^ (salt * 0x9e3779b97f4a7c15ULL), index);
  }
  // Double-cover sweeps grow with |Omega|^2.
  std::size_t cover_vertices() const { return options.max_vertices; }
};

RowList suite_thm1(const Context& ctx) {
  return parallel_rows(ctx.count(200), ctx.options.threads, [&](std::size_t i) {
    RowList rows;
    const std::string key = fixture_key("rand", i);
    GraphDocument doc = ctx.fixture(i, ctx.options.max_vertices);
    // Redraw fixtures with fewer than four boundary sites.
    for (std::uint64_t attempt = 1; outer_boundary_order(doc.graph).size() < 4; ++attempt) {
      auto rng = ctx.engine(i, 1000 + attempt);
      RandomFixtureOptions fixture_options;
      fixture_options.max_vertices = ctx.options.max_vertices;
      doc = random_planar_fixture(rng, fixture_options);
    }
    const std::string payload = serialize_graph(doc.graph, doc.weights);
    PartitionTable table(doc.graph, doc.weights);
    const std::vector<VertexId> boundary = outer_boundary_order(doc.graph);
    auto check = [&](const std::vector<VertexId>& sites) {
      const CorrelationReport report = verify_theorem1(table, sites);
      SuiteRow row = make_row(key, "S" + std::to_string(sites.size()) + " " + report.configuration, report.lhs, report.rhs);
      row.payload = payload;
      rows.push_back(std::move(row));
    };
    for_each_subset(boundary.size(), 4, [&](const std::vector<std::size_t>& idx) {
      check({boundary[idx[0]], boundary[idx[1]], boundary[idx[2]], boundary[idx[3]]});
    });
    // Six-site selections: a few per fixture, in boundary order.
    auto rng = ctx.engine(i, 6);
    std::vector<std::vector<std::size_t>> six;
    for_each_subset(boundary.size(), 6, [&](const std::vector<std::size_t>& idx) { six.push_back(idx); });
    std::shuffle(six.begin(), six.end(), rng);
    six.resize(std::min<std::size_t>(six.size(), 3));
    std::sort(six.begin(), six.end());
    for (const auto& idx : six) {
      std::vector<VertexId> sites;
      for (std::size_t j : idx) sites.push_back(boundary[j]);
      check(sites);
    }
    return rows;
  });
}

RowList suite_gauge(const Context& ctx) {
  return parallel_rows(ctx.count(100), ctx.options.threads, [&](std::size_t i) {
    const GraphDocument doc = ctx.fixture(i, ctx.options.max_vertices);
    auto rng = ctx.engine(i, 17);
    const std::size_t n = doc.graph.vertex_count();
    // Alternate odd and even |B|.
    std::uniform_int_distribution<std::size_t> size(1, n);
    std::size_t b_size = size(rng);
    if ((b_size % 2) != (i % 2)) b_size = b_size == n ? b_size - 1 : b_size + 1;
    const std::vector<VertexId> b = pick(rng, all_vertices(doc.graph), b_size);
    const GaugeReport report = verify_gauge(doc.graph, doc.weights, b);
    SuiteRow row = make_row(fixture_key("rand", i), "|B|=" + std::to_string(b.size()) + " B=" + labels(doc.graph, b),
                            report.flipped, report.expected);
    row.payload = serialize_graph(doc.graph, doc.weights);
    return RowList{std::move(row)};
  });
}

// Even-sized monomer sets keep both Omega(M1) and Omega(M2) nonempty candidates.
std::pair<std::vector<VertexId>, std::vector<VertexId>> random_monomers(std::mt19937_64& rng, const PlanarGraph& graph,
                                                                        std::size_t reserve) {
  std::uniform_int_distribution<int> half(0, 1);
  const auto m1 = pick(rng, all_vertices(graph), 2 * half(rng));
  auto rest = minus(all_vertices(graph), m1);
  std::size_t m2_size = 2 * half(rng);
  if (rest.size() < m2_size + reserve) m2_size = 0;
  const auto m2 = pick(rng, rest, m2_size);
  return {m1, m2};
}

RowList suite_lemma1(const Context& ctx) {
  return parallel_rows(ctx.count(60), ctx.options.threads, [&](std::size_t i) {
    RowList rows;
    const GraphDocument doc = ctx.fixture(i, ctx.cover_vertices());
    auto rng = ctx.engine(i, 1);
    for (int trial = 0; trial < 3; ++trial) {
      const auto [m1, m2] = random_monomers(rng, doc.graph, 0);
      const Lemma1Audit audit = audit_lemma1(doc.graph, {m1}, {m2});
      std::string check = "M1=" + labels(doc.graph, m1) + ";M2=" + labels(doc.graph, m2) +
                          ";covers=" + std::to_string(audit.covers) + ";classes=" + std::to_string(audit.classes) +
                          ";degree_failures=" + std::to_string(audit.degree_failures) +
                          ";parity_failures=" + std::to_string(audit.parity_failures) +
                          ";class_size_failures=" + std::to_string(audit.class_size_failures);
      // lhs: sum of 2^{n_s} over classes; rhs: number of double covers.
      SuiteRow row = make_row(fixture_key("rand", i), check, Scalar(static_cast<long>(audit.class_size_sum)),
                              Scalar(static_cast<long>(audit.covers)));
      row.equal = audit.ok();
      row.payload = serialize_graph(doc.graph, doc.weights);
      rows.push_back(std::move(row));
    }
    return rows;
  });
}

RowList suite_switching1(const Context& ctx) {
  return parallel_rows(ctx.count(60), ctx.options.threads, [&](std::size_t i) {
    RowList rows;
    const GraphDocument doc = ctx.fixture(i, ctx.cover_vertices());
    auto rng = ctx.engine(i, 11);
    const auto [m1, m2] = random_monomers(rng, doc.graph, 2);
    std::vector<VertexId> used = m1;
    used.insert(used.end(), m2.begin(), m2.end());
    const auto xy = pick(rng, minus(all_vertices(doc.graph), used), 2);
    ConnectionSpec c;
    std::bernoulli_distribution extra(0.5);
    if (used.size() >= 2 && extra(rng)) {
      const auto pair = pick(rng, used, 2);
      c.emplace_back(pair[0], pair[1]);
    }
    const SwitchingReport report = verify_switching_I(doc.graph, doc.weights, {m1}, {m2}, xy[0], xy[1], c);
    std::string base = "M1=" + labels(doc.graph, m1) + ";M2=" + labels(doc.graph, m2) + ";x,y=" +
                       labels(doc.graph, xy) + ";C=" + (c.empty() ? "" : labels(doc.graph, {c[0].first, c[0].second}));
    const std::string payload = serialize_graph(doc.graph, doc.weights);
    rows.push_back(make_row(fixture_key("rand", i), "same-side " + base, report.same_side_lhs, report.same_side_rhs));
    rows.push_back(make_row(fixture_key("rand", i), "cross " + base, report.cross_lhs, report.cross_rhs));
    for (auto& row : rows) row.payload = payload;
    return rows;
  });
}

std::vector<PairFixture> pair_fixtures(const Context& ctx) {
  const std::string dir = ctx.options.data_dir.empty() ? default_data_dir() : ctx.options.data_dir;
  std::vector<PairFixture> out;
  for (const std::string& path : pair_fixture_paths(dir)) out.push_back(read_pair_fixture(path));
  if (out.empty()) throw Error(ErrorCode::kParseError, "no canonical-pair fixtures found in " + dir);
  return out;
}

// Same lines with seeded random weights.
WeightMap random_weights(const PlanarGraph& graph, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> magnitude(1, 9);
  std::vector<Scalar> values;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    Rational w(magnitude(rng), magnitude(rng));
    w.canonicalize();
    values.emplace_back(w);
  }
  return WeightMap(std::move(values));
}

std::string pair_payload(const PairFixture& f, const WeightMap& weights) {
  return serialize_with_pairs(f.document.graph, weights, f.pairs);
}

RowList suite_thm2(const Context& ctx) {
  const auto fixtures = pair_fixtures(ctx);
  return parallel_rows(2 * fixtures.size(), ctx.options.threads, [&](std::size_t i) {
    const PairFixture& f = fixtures[i / 2];
    const bool reweighted = i % 2 == 1;
    auto rng = ctx.engine(i / 2, 23);
    const WeightMap weights = reweighted ? random_weights(f.document.graph, rng) : f.document.weights;
    const std::string key = f.name + (reweighted ? "/random-weights" : "");
    const CorrelationReport report = verify_theorem2(f.document.graph, weights, f.pairs);
    const Scalar r = r_expansion(f.document.graph, weights, cyclic_order(f.document.graph, f.pairs));
    RowList rows{make_row(key, "pfaffian " + report.configuration, report.lhs, report.rhs),
                 make_row(key, "R-expansion " + report.configuration, report.lhs, r)};
    for (auto& row : rows) row.payload = pair_payload(f, weights);
    return rows;
  });
}

RowList suite_switching2(const Context& ctx) {
  const auto fixtures = pair_fixtures(ctx);
  return parallel_rows(fixtures.size(), ctx.options.threads, [&](std::size_t i) {
    const PairFixture& f = fixtures[i];
    const auto ordered = cyclic_order(f.document.graph, f.pairs);
    const std::size_t n2 = ordered.size();
    RowList rows;
    for (std::size_t k = 2; k <= n2; ++k) {
      if (n2 == 2) {
        const auto report = verify_switching_II(f.document.graph, f.document.weights, ordered, k, 0, 0);
        rows.push_back(make_row(f.name, "first k=" + std::to_string(k), report.first_lhs, report.first_rhs));
        continue;
      }
      bool first_done = false;
      for (std::size_t l = 2; l <= n2; ++l) {
        for (std::size_t m = 2; m <= n2; ++m) {
          if (l == k || m == k || l == m) continue;
          const auto report = verify_switching_II(f.document.graph, f.document.weights, ordered, k, l, m);
          if (!first_done) {
            rows.push_back(make_row(f.name, "first k=" + std::to_string(k), report.first_lhs, report.first_rhs));
            first_done = true;
          }
          rows.push_back(make_row(f.name, "second k=" + std::to_string(k) + " l=" + std::to_string(l) + " m=" + std::to_string(m),
                                  report.second_lhs, report.second_rhs));
        }
      }
    }
    for (auto& row : rows) row.payload = pair_payload(f, f.document.weights);
    return rows;
  });
}

RowList suite_parity(const Context& ctx) {
  const auto fixtures = pair_fixtures(ctx);
  return parallel_rows(fixtures.size(), ctx.options.threads, [&](std::size_t i) {
    const PairFixture& f = fixtures[i];
    const ParitySweep sweep = sweep_intersection_parity(f.document.graph, f.pairs);
    // lhs: checks that held; rhs: checks made.
    SuiteRow row = make_row(f.name, "covers=" + std::to_string(sweep.covers) + ";checks=" + std::to_string(sweep.checks),
                            Scalar(static_cast<long>(sweep.checks - sweep.failures)),
                            Scalar(static_cast<long>(sweep.checks)));
    row.equal = sweep.failures == 0 && sweep.checks > 0;
    row.payload = pair_payload(f, f.document.weights);
    return RowList{std::move(row)};
  });
}

DisorderLine horizontal_line(const Rational& x0, const Rational& x1, const Rational& y) {
  return {{{x0, y}, {x1, y}}};
}

// Deformations of a line running along the middle of a row of faces.
RowList suite_homotopy(const Context& ctx) {
  struct Case {
    std::size_t rows;
    std::size_t cols;
    bool random;
  };
  const std::vector<Case> cases{{4, 4, false}, {4, 6, false}, {5, 6, false}, {4, 6, true}, {5, 6, true}};
  return parallel_rows(cases.size(), ctx.options.threads, [&](std::size_t i) {
    const Case& c = cases[i];
    GraphDocument doc = grid_graph(c.rows, c.cols);
    auto rng = ctx.engine(i, 31);
    if (c.random) doc.weights = random_weights(doc.graph, rng);
    const std::string key = "grid" + std::to_string(c.rows) + "x" + std::to_string(c.cols) + (c.random ? "/random-weights" : "");
    const std::string payload = serialize_graph(doc.graph, doc.weights);
    RowList rows;
    const Rational half(1, 2);
    const Rational x0 = half;
    const Rational x1 = Rational(static_cast<long>(c.cols)) - Rational(3, 2);
    const Rational y = Rational(1) + half;  // middle of the second row of faces
    const DisorderLine base = horizontal_line(x0, x1, y);
    auto add = [&](const std::string& name, const DisorderLine& deformed) {
      const HomotopyReport report = homotopy_check(doc.graph, doc.weights, base, deformed);
      SuiteRow row = make_row(key, name + " swept=" + std::to_string(report.swept), report.deformed,
                              sign_power(static_cast<long>(report.swept)) * report.original);
      row.equal = report.equal;
      row.payload = payload;
      rows.push_back(std::move(row));
    };
    add("identical", base);
    // A wiggle that stays inside the faces it already visits.
    add("wiggle", {{{x0, y}, {Rational(3, 4), y + Rational(1, 4)}, {Rational(5, 4), y - Rational(1, 4)}, {x1, y}}});
    // Detours over j vertices of the row above and the row below.
    for (std::size_t j = 1; j + 2 < c.cols; ++j) {
      for (int side : {1, -1}) {
        const Rational offset = Rational(side);
        const Rational a = Rational(1) - half;
        const Rational b = Rational(static_cast<long>(j)) + half;
        add(std::string(side > 0 ? "over" : "under") + "-" + std::to_string(j),
            {{{x0, y}, {a, y}, {a, y + offset}, {b, y + offset}, {b, y}, {x1, y}}});
      }
    }
    // Closed loops around k vertices: <tau> = (-1)^k, also by the signed sum.
    for (std::size_t k = 1; k + 1 < c.cols; ++k) {
      const Rational lo = half;
      const Rational hi = Rational(static_cast<long>(k)) + half;
      const DisorderLine loop{{{lo, half}, {hi, half}, {hi, Rational(3, 2)}, {lo, Rational(3, 2)}, {lo, half}}};
      const Scalar via_flip = disorder_expectation(doc.graph, doc.weights, {loop});
      const Scalar via_sum = disorder_expectation_signed_sum(doc.graph, doc.weights, {loop});
      rows.push_back(make_row(key, "closed loop k=" + std::to_string(k), via_flip, sign_power(static_cast<long>(k))));
      rows.push_back(make_row(key, "closed loop signed sum k=" + std::to_string(k), via_sum, via_flip));
      rows.back().payload = rows[rows.size() - 2].payload = payload;
    }
    return rows;
  });
}

RowList suite_pathgas(const Context& ctx) {
  return parallel_rows(ctx.count(60), ctx.options.threads, [&](std::size_t i) {
    RowList rows;
    const std::string key = fixture_key("rand", i);
    const GraphDocument doc = ctx.fixture(i, ctx.cover_vertices());
    auto rng = ctx.engine(i, 41);
    PartitionTable table(doc.graph, doc.weights);
    const auto [m1, m2] = random_monomers(rng, doc.graph, 0);
    const Scalar gas = loop_gas_Z2(doc.graph, doc.weights, {m1}, {m2});
    const std::string sets = "M1=" + labels(doc.graph, m1) + ";M2=" + labels(doc.graph, m2);
    rows.push_back(make_row(key, "loop gas " + sets, gas, table.z({m1}) * table.z({m2})));
    rows.push_back(make_row(key, "loop gas vs amplitude " + sets, gas,
                            connection_amplitude(doc.graph, doc.weights, {m1}, {m2}, {})));
    const auto two = pick(rng, all_vertices(doc.graph), 2);
    rows.push_back(make_row(key, "two-point " + labels(doc.graph, two),
                            two_point_path_representation(table, two[0], two[1]), table.correlation({two})));
    const auto four = pick(rng, all_vertices(doc.graph), 4);
    rows.push_back(make_row(key, "four-point " + labels(doc.graph, four),
                            correlation_path_representation(table, {four}), table.correlation({four})));
    for (auto& row : rows) row.payload = serialize_graph(doc.graph, doc.weights);
    return rows;
  });
}

using SuiteBody = RowList (*)(const Context&);

const std::map<std::string, SuiteBody>& registry() {
  static const std::map<std::string, SuiteBody> suites{
      {"lemma1", suite_lemma1},     {"switching1", suite_switching1}, {"switching2", suite_switching2},
      {"gauge", suite_gauge},       {"homotopy", suite_homotopy},     {"parity", suite_parity},
      {"thm1", suite_thm1},         {"thm2", suite_thm2},             {"pathgas", suite_pathgas},
  };
  return suites;
}

}  // namespace

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.equal; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, body] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::kPrecondition, "unknown suite '" + name + "'");
  SuiteResult result;
  result.suite = name;
  result.options = options;
  Context ctx{options};
  RowList rows = it->second(ctx);
  for (SuiteRow& row : rows) {
    if (!options.only.empty() && row.fixture != options.only) continue;
    if (options.inject_fault) {
      row.rhs = -row.rhs;
      row.equal = row.equal && row.lhs == row.rhs;
    }
    result.rows.push_back(std::move(row));
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const SuiteRow& a, const SuiteRow& b) { return a.fixture < b.fixture; });
  return result;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string suite_csv(const SuiteResult& result) {
  std::string out = "suite,fixture,check,lhs,rhs,lhs_decimal,rhs_decimal,equal\n";
  for (const SuiteRow& row : result.rows) {
    out += csv_field(result.suite) + ',' + csv_field(row.fixture) + ',' + csv_field(row.check) + ',' +
           csv_field(row.lhs.to_string()) + ',' + csv_field(row.rhs.to_string()) + ',' +
           csv_field(row.lhs.to_decimal()) + ',' + csv_field(row.rhs.to_decimal()) + ',' +
           (row.equal ? "true" : "false") + '\n';
  }
  return out;
}

std::string failure_report(const SuiteResult& result) {
  nlohmann::json doc;
  doc["suite"] = result.suite;
  doc["seed"] = result.options.seed;
  doc["max_vertices"] = result.options.max_vertices;
  doc["inject_fault"] = result.options.inject_fault;
  doc["failures"] = nlohmann::json::array();
  for (const SuiteRow& row : result.rows) {
    if (row.equal) continue;
    nlohmann::json entry;
    entry["fixture"] = row.fixture;
    entry["check"] = row.check;
    entry["lhs"] = row.lhs.to_string();
    entry["rhs"] = row.rhs.to_string();
    entry["replay"] = "dimerlab verify " + result.suite + " --seed " + std::to_string(result.options.seed) +
                      " --max-vertices " + std::to_string(result.options.max_vertices) + " --only " + row.fixture +
                      (result.options.inject_fault ? " --inject-fault" : "");
    if (!row.payload.empty()) entry["graph"] = nlohmann::json::parse(row.payload);
    doc["failures"].push_back(std::move(entry));
  }
  return doc.dump(1) + "\n";
}

std::string default_data_dir() {
  if (const char* env = std::getenv("DIMERLAB_DATA_DIR")) return env;
  return DIMERLAB_DATA_DIR;
}

std::vector<std::string> pair_fixture_paths(const std::string& data_dir) {
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("thm2_", 0) == 0 && entry.path().extension() == ".json") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace dimerlab
