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

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfourier/verify.hpp"

namespace qfourier {

using Json = nlohmann::ordered_json;

/// Version string embedded in report metadata.
const char* version();

/// %.{digits}g; infinities render as inf / -inf, NaN as nan.
std::string format_number(double v, int digits = 17);

/// Two-space indented JSON with every float at 17 significant digits.
/// Non-finite floats become the strings "inf", "-inf" and "nan".
std::string dump_json(const Json& j);

inline constexpr std::array<const char*, 10> kCsvColumns = {
    "transform", "corpus", "p", "p1", "lambda", "lhs", "rhs_proof", "rhs_statement", "slack",
    "verdict"};

using CsvRow = std::array<std::string, 10>;

Json to_json(const InequalityReport& r);
Json to_json(const UnitarityReport& r);
Json to_json(const DecayReport& r);
Json to_json(const LimitReport& r);
Json to_json(const MinkowskiReport& r);
Json to_json(const BecknerReport& r);
Json to_json(const OracleReport& r);

std::vector<CsvRow> to_csv(const InequalityReport& r);
std::vector<CsvRow> to_csv(const UnitarityReport& r);
std::vector<CsvRow> to_csv(const DecayReport& r);
std::vector<CsvRow> to_csv(const LimitReport& r);
std::vector<CsvRow> to_csv(const MinkowskiReport& r);
std::vector<CsvRow> to_csv(const BecknerReport& r);
std::vector<CsvRow> to_csv(const OracleReport& r);

enum class Format { json, csv };

Format format_from_string(const std::string& name);

/// Accumulates results of one run in a fixed order.
class ReportDocument {
 public:
  explicit ReportDocument(Json meta) : meta_(std::move(meta)) {}

  template <class Report>
  void add(const Report& r) {
    results_.push_back(to_json(r));
    for (auto& row : to_csv(r)) rows_.push_back(std::move(row));
    verdicts_.push_back(r.verdict);
  }

  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  Json& meta() { return meta_; }

  std::string render(Format format) const;

 private:
  Json meta_;
  std::vector<Json> results_;
  std::vector<CsvRow> rows_;
  std::vector<Verdict> verdicts_;
};

/// Writes to a sibling temporary file and renames it over path.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace qfourier
