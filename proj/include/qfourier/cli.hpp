// Copyright 2026 The qfourier Authors
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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfourier/report_io.hpp"
#include "qfourier/sampling.hpp"
#include "qfourier/verify.hpp"

namespace qfourier::cli {

/// Usage and configuration problems; mapped to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Suites in their canonical run order.
const std::vector<std::string>& suite_names();

/// Parameter keys accepted by a suite.
const std::vector<std::string>& suite_keys(const std::string& suite);

struct RunConfig {
  GridSpec grid = default_grid();
  std::optional<std::filesystem::path> corpus_path;
  std::vector<std::string> suites;
  /// suite name -> {key: value}; values are numbers, arrays or strings.
  Json params = Json::object();
  Format format = Format::json;
  std::optional<std::filesystem::path> out;
  bool allow_untrusted = false;
};

/// Reads a JSON config document; unknown keys are rejected.
RunConfig load_config(const std::filesystem::path& path);

struct RunOutcome {
  int exit_code = 0;
  std::string report;
  std::vector<Verdict> verdicts;
};

/// Runs the selected suites in canonical order and renders the report.
/// Writes to config.out when set; the caller prints the report otherwise.
RunOutcome run(const RunConfig& config);

/// 0 when every verdict passes, 1 on any fail or on untrusted without allow_untrusted.
int exit_status(const std::vector<Verdict>& verdicts, bool allow_untrusted);

struct ConstantsParams {
  double c1 = 1.0;
  double lambda = 1.0;
  double diameter = 1.0;
  double b = 1.0;
  int dimension = 1;
  double support_length = 2.0;
};

/// Proof-form and statement-form constants side by side, 9 significant digits.
void print_constants(std::ostream& out, const Exponent& p, const ConstantsParams& params);

void list_corpus(std::ostream& out, const Corpus& corpus);

/// Command-line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qfourier::cli
