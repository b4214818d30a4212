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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dimerlab/error.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/suites.hpp"
#include "dimerlab/sweeps.hpp"

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    dimerlab::write_text_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dimerlab;
  CLI::App app{"Exact monomer and order-disorder correlations of planar dimer covers"};
  app.require_subcommand(1);

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string output;
  auto* gen = app.add_subcommand("gen-grid", "Write an R x C grid graph file");
  gen->add_option("--rows", rows, "Rows")->required();
  gen->add_option("--cols", cols, "Columns")->required();
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  std::string suite;
  SuiteOptions suite_options;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", suite_options.seed, "Fixture seed");
  verify->add_option("--max-vertices", suite_options.max_vertices, "Vertex bound for random fixtures");
  verify->add_option("--fixtures", suite_options.fixture_count, "Number of random fixtures (0: default)");
  verify->add_option("--only", suite_options.only, "Keep only this fixture key");
  verify->add_option("--data-dir", suite_options.data_dir, "Directory with canonical-pair fixtures");
  verify->add_option("--threads", suite_options.threads, "Worker threads (0: all cores)");
  verify->add_flag("--inject-fault", suite_options.inject_fault, "Negate every right-hand side");
  verify->add_option("-o,--output", output, "CSV report (default stdout)");

  std::size_t max_width = 16;
  std::size_t max_height = 8;
  std::string separations = "1,2,3,5";
  auto* ruelle = app.add_subcommand("ruelle", "Boundary two-point function sweep on strips");
  ruelle->add_option("--max-width", max_width, "Largest strip width");
  ruelle->add_option("--max-height", max_height, "Largest strip height");
  ruelle->add_option("--separations", separations, "Comma separated site distances");
  ruelle->add_option("-o,--output", output, "CSV report (default stdout)");

  std::string sizes = "2x2,4x4,6x6";
  auto* bench = app.add_subcommand("bench", "Enumeration against Pfaffian on grids");
  bench->add_option("--sizes", sizes, "Comma separated RxC list");
  bench->add_option("-o,--output", output, "CSV report (default stdout)");

  std::string file;
  std::string method = "pfaffian";
  auto* z = app.add_subcommand("z", "Partition function of a graph file");
  z->add_option("file", file, "Graph file")->required();
  z->add_option("--method", method, "enum or pfaffian")->check(CLI::IsMember({"enum", "pfaffian"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen) {
      const GraphDocument doc = grid_graph(rows, cols);
      emit(output, serialize_graph(doc.graph, doc.weights));
      return 0;
    }
    if (*verify) {
      const SuiteResult result = run_suite(suite, suite_options);
      emit(output, suite_csv(result));
      std::cerr << suite << ": " << result.rows.size() << " rows, " << result.failures() << " failures\n";
      if (result.passed()) return 0;
      const std::string report = failure_report(result);
      if (output.empty() || output == "-") {
        std::cerr << report;
      } else {
        write_text_file(output + ".failures.json", report);
        std::cerr << "failing configurations written to " << output << ".failures.json\n";
      }
      return kVerificationFailure;
    }
    if (*ruelle) {
      emit(output, ruelle_csv(ruelle_sweep(max_width, max_height, parse_list(separations))));
      return 0;
    }
    if (*bench) {
      std::vector<BenchRow> table;
      bool ok = true;
      for (const auto& [r, c] : parse_sizes(sizes)) {
        table.push_back(bench_grid(r, c));
        const BenchRow& row = table.back();
        if (row.enumerated && row.z_enum != row.z_pfaffian) ok = false;
      }
      emit(output, bench_csv(table));
      return ok ? 0 : kVerificationFailure;
    }
    if (*z) {
      const GraphDocument doc = read_graph_file(file);
      const Scalar value = method == "enum" ? partition_function(doc.graph, doc.weights)
                                            : fast_partition_function(doc.graph, doc.weights);
      std::cout << value.to_string() << " " << value.to_decimal() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
