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

#include <cstdint>
#include <string>
#include <vector>

#include "dimerlab/scalar.hpp"

namespace dimerlab {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t max_vertices = 16;
  std::size_t fixture_count = 0;  // 0: the suite's default
  bool inject_fault = false;      // negate every right-hand side
  std::string only;               // restrict to one fixture key
  std::string data_dir;           // empty: the built-in data directory
  std::size_t threads = 0;        // 0: hardware concurrency
};

struct SuiteRow {
  std::string fixture;
  std::string check;
  Scalar lhs;
  Scalar rhs;
  bool equal = false;
  std::string payload;  // graph file text for replay
};

struct SuiteResult {
  std::string suite;
  SuiteOptions options;
  std::vector<SuiteRow> rows;  // sorted by fixture key

  std::size_t failures() const;
  bool passed() const { return failures() == 0 && !rows.empty(); }
};

const std::vector<std::string>& suite_names();

// Throws kPrecondition for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

std::string suite_csv(const SuiteResult& result);

// Failing rows with their fixtures and the command line that regenerates them.
std::string failure_report(const SuiteResult& result);

std::string default_data_dir();

// Shipped canonical-pair fixtures (thm2_*.json), sorted by name.
std::vector<std::string> pair_fixture_paths(const std::string& data_dir);

std::string csv_field(const std::string& text);

}  // namespace dimerlab
