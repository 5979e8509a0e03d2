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

#include "qfourier/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#ifndef QFOURIER_VERSION
#define QFOURIER_VERSION "v0.0.0"
#endif

namespace qfourier {

namespace {

void emit(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(key).dump() << ": ";
        emit(os, value, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        emit(os, value, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        os << format_number(v);
      } else {
        os << '"' << format_number(v) << '"';
      }
      return;
    }
    default:
      os << j.dump();
      return;
  }
}

Json exponent_json(const Exponent& p) {
  return p.is_infinite() ? Json("inf") : Json(p.value());
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) { return format_number(v); }

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

template <class T>
Json values(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(static_cast<T>(x));
  return a;
}

}  // namespace

const char* version() { return QFOURIER_VERSION; }

std::string format_number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << "\n";
  return os.str();
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["kind"] = "hausdorff_young";
  j["transform"] = r.transform;
  j["corpus"] = r.corpus;
  j["p"] = exponent_json(r.p);
  j["p1"] = exponent_json(r.p1);
  j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  j["norm_f"] = r.norm_f;
  j["lhs"] = r.lhs;
  j["bound_proof"] = r.bound_proof;
  j["bound_statement"] = r.bound_statement;
  j["rhs_proof"] = r.rhs_proof;
  j["rhs_statement"] = r.rhs_statement;
  j["slack"] = r.slack;
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  j["note"] = r.note;
  return j;
}

std::vector<CsvRow> to_csv(const InequalityReport& r) {
  return {{r.transform, r.corpus, to_string(r.p), to_string(r.p1),
           r.lambda ? num(*r.lambda) : "", num(r.lhs), num(r.rhs_proof), num(r.rhs_statement),
           num(r.slack), to_string(r.verdict)}};
}

Json to_json(const UnitarityReport& r) {
  Json j;
  j["kind"] = "unitarity";
  j["transform"] = r.transform;
  j["corpus"] = r.corpus;
  j["b"] = r.b;
  j["z_sign"] = r.z_sign;
  j["norm_f"] = r.norm_f;
  j["norm_hf"] = r.norm_hf;
  j["ratio"] = r.ratio;
  j["deviation"] = r.deviation;
  j["tolerance"] = r.tolerance;
  j["skipped"] = r.skipped;
  j["verdict"] = to_string(r.verdict);
  j["note"] = r.note;
  return j;
}

std::vector<CsvRow> to_csv(const UnitarityReport& r) {
  return {{r.transform, r.corpus, "2", "2", "", num(r.norm_hf), num(r.norm_f), num(r.norm_f),
           num(r.norm_f - r.norm_hf), to_string(r.verdict)}};
}

Json to_json(const DecayReport& r) {
  Json j;
  j["kind"] = "decay";
  j["transform"] = r.kind;
  j["phase"] = r.phase;
  j["lambdas"] = doubles(r.lambdas);
  j["norms"] = doubles(r.norms);
  j["scaled_norms"] = doubles(r.scaled);
  j["target_nodes"] = values(r.target_nodes);
  j["source_nodes"] = values(r.source_nodes);
  j["under_resolved"] = values(r.under_resolved);
  j["converged"] = values(r.converged);
  j["slope"] = r.slope;
  j["target_slope"] = r.target_slope;
  j["max_scaled"] = r.max_scaled;
  j["argmax_lambda"] = r.argmax_lambda;
  j["scaled_limit"] = r.scaled_limit ? Json(*r.scaled_limit) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["note"] = r.note;
  return j;
}

std::vector<CsvRow> to_csv(const DecayReport& r) {
  std::vector<CsvRow> rows;
  const std::string transform = r.kind + ":" + r.phase;
  for (std::size_t k = 0; k < r.lambdas.size(); ++k) {
    const double lambda = r.lambdas[k];
    std::string rhs;
    std::string slack;
    if (r.scaled_limit) {
      const double bound = *r.scaled_limit * std::pow(lambda, r.target_slope);
      rhs = num(bound);
      slack = num(bound - r.norms[k]);
    }
    rows.push_back({transform, "", "2", "2", num(lambda), num(r.norms[k]), rhs, "", slack,
                    to_string(r.verdict)});
  }
  return rows;
}

Json to_json(const LimitReport& r) {
  Json j;
  j["kind"] = "dirichlet";
  j["corpus"] = r.corpus;
  j["x"] = r.x;
  j["target"] = r.target;
  j["lambdas"] = doubles(r.lambdas);
  j["approximants"] = doubles(r.approximants);
  j["errors"] = doubles(r.errors);
  j["noise_floor"] = doubles(r.noise_floor);
  j["tolerance"] = r.tolerance;
  j["decreasing"] = r.decreasing;
  j["verdict"] = to_string(r.verdict);
  j["note"] = r.note;
  return j;
}

std::vector<CsvRow> to_csv(const LimitReport& r) {
  std::vector<CsvRow> rows;
  for (std::size_t k = 0; k < r.lambdas.size(); ++k) {
    rows.push_back({"dirichlet", r.corpus, "", "", num(r.lambdas[k]), num(r.errors[k]),
                    num(r.tolerance), "", num(r.tolerance - r.errors[k]), to_string(r.verdict)});
  }
  return rows;
}

Json to_json(const MinkowskiReport& r) {
  Json j;
  j["kind"] = "minkowski";
  j["table"] = r.table;
  j["s"] = r.s;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::vector<CsvRow> to_csv(const MinkowskiReport& r) {
  return {{"minkowski", r.table, num(r.s), "", "", num(r.lhs), num(r.rhs), "", num(r.slack),
           to_string(r.verdict)}};
}

Json to_json(const BecknerReport& r) {
  Json j;
  j["kind"] = "beckner";
  j["p"] = r.p;
  j["norm_f"] = r.norm_f;
  j["norm_hat"] = r.norm_hat;
  j["ratio"] = r.ratio;
  j["constant"] = r.constant;
  j["relative_error"] = r.relative_error;
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::vector<CsvRow> to_csv(const BecknerReport& r) {
  const Exponent p(r.p);
  return {{"beckner", "exp(-pi x^2)", to_string(p), to_string(conjugate_exponent(p)), "",
           num(r.norm_hat), num(r.constant * r.norm_f), "", num(r.constant * r.norm_f - r.norm_hat),
           to_string(r.verdict)}};
}

Json to_json(const OracleReport& r) {
  Json j;
  j["kind"] = "oracle";
  j["name"] = r.name;
  j["detail"] = r.detail;
  j["value"] = r.value;
  j["reference"] = r.reference;
  j["relative_error"] = r.relative_error;
  j["tolerance"] = r.tolerance;
  j["used_fft"] = r.used_fft;
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::vector<CsvRow> to_csv(const OracleReport& r) {
  return {{r.name, r.detail, "", "", "", num(r.relative_error), num(r.tolerance), "",
           num(r.tolerance - r.relative_error), to_string(r.verdict)}};
}

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string ReportDocument::render(Format format) const {
  if (format == Format::json) {
    Json doc;
    doc["meta"] = meta_;
    doc["results"] = Json::array();
    for (const auto& r : results_) doc["results"].push_back(r);
    return dump_json(doc);
  }
  std::string out;
  for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
    if (c) out += ',';
    out += kCsvColumns[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(row[c]);
    }
    out += '\n';
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qfourier
