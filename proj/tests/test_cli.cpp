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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfourier/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qfourier");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int status = qfourier::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qfourier_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify hy for HQ over the default corpus") {
    const auto r = invoke({"verify", "hy", "--family", "hq", "--p", "1,1.3333333333,2", "--phase",
                           "1,1,1,1,1"});
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["results"].size() == 15);
    CHECK(doc["meta"].contains("grid"));
    CHECK(doc["meta"].contains("version"));
  }

  TEST_CASE("verify oscdecay reports a slope") {
    const auto r = invoke({"verify", "oscdecay", "--degree", "2", "--coeffs", "1", "--lambdas",
                           "16,32,64,128"});
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["results"].size() == 1);
    CHECK(doc["results"][0].contains("slope"));
  }

  TEST_CASE("missing config exits 2") {
    const auto r = invoke({"--config", "/nonexistent/qfourier.json", "verify", "hy"});
    CHECK(r.status == 2);
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("config with unknown keys exits 2") {
    const auto dir = scratch_dir("badkey");
    write_file(dir / "run.json", R"({"suites": ["minkowski"], "colour": "blue"})");
    CHECK(invoke({"--config", (dir / "run.json").string(), "verify"}).status == 2);
    write_file(dir / "broken.json", "{ not json");
    CHECK(invoke({"--config", (dir / "broken.json").string(), "verify"}).status == 2);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"verify", "nosuchsuite"}).status == 2);
    CHECK(invoke({"verify", "minkowski", "--family", "hq"}).status == 2);
    CHECK(invoke({"verify", "hy", "--p", "3"}).status == 2);
    CHECK(invoke({"--grid", "1,0,10", "verify", "minkowski"}).status == 2);
    CHECK(invoke({"--format", "xml", "verify", "minkowski"}).status == 2);
  }

  TEST_CASE("constants table") {
    auto r = invoke({"constants", "--p", "2", "--b", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("HQ              1 ") != std::string::npos);
    r = invoke({"constants", "--p", "1", "--c1", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("T_lambda        2 ") != std::string::npos);
    r = invoke({"constants", "--p", "1.3333333333333333", "--n", "1"});
    CHECK(r.out.find("beckner         0.936687") != std::string::npos);
    CHECK(invoke({"constants", "--p", "2.5"}).status == 2);
    CHECK(invoke({"constants", "--p", "0.5"}).status == 2);
  }

  TEST_CASE("corpus list") {
    const auto r = invoke({"corpus", "list"});
    CHECK(r.status == 0);
    CHECK(r.out.find("gauss_s1") != std::string::npos);
    CHECK(r.out.find("modgauss_s1_w3") != std::string::npos);
  }

  TEST_CASE("flags override config values") {
    const auto dir = scratch_dir("override");
    write_file(dir / "run.json", R"({"suites": ["minkowski"], "minkowski": {"tables": 3, "s": "1,2"}})");
    auto r = invoke({"--config", (dir / "run.json").string(), "verify"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["results"].size() == 6);
    r = invoke({"--config", (dir / "run.json").string(), "verify", "--tables", "5"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["results"].size() == 10);
  }

  TEST_CASE("corpus path in config is relative to the config file") {
    const auto dir = scratch_dir("corpus");
    write_file(dir / "corpus.json",
               R"([{"id": "narrow", "kind": "gaussian", "params": {"sigma": 0.75}}])");
    write_file(dir / "run.json", R"({"suites": ["hy"], "corpus": "corpus.json",
                                     "hy": {"family": "hq", "p": "1,2"}})");
    const auto r = invoke({"--config", (dir / "run.json").string(), "verify"});
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][0]["corpus"] == "narrow");
  }

  TEST_CASE("untrusted results exit 1 unless allowed") {
    const std::vector<std::string> base = {"--grid", "-16,16,64", "verify", "hy", "--family", "T_lambda",
                                           "--lambda", "400", "--p", "1,2"};
    CHECK(invoke(base).status == 1);
    auto allowed = base;
    allowed.insert(allowed.begin(), "--allow-untrusted");
    CHECK(invoke(allowed).status == 0);
  }

  TEST_CASE("reports are written atomically and only on success") {
    const auto dir = scratch_dir("out");
    const auto target = dir / "report.json";
    CHECK(invoke({"--out", target.string(), "verify", "hy", "--p", "7"}).status == 2);
    CHECK_FALSE(fs::exists(target));
    CHECK(invoke({"--out", target.string(), "verify", "minkowski", "--tables", "4"}).status == 0);
    CHECK(fs::exists(target));
    CHECK_FALSE(fs::exists(dir / "report.json.tmp"));
    const std::string first = read_file(target);
    CHECK(invoke({"--out", target.string(), "verify", "minkowski", "--tables", "4"}).status == 0);
    CHECK(read_file(target) == first);
  }

  TEST_CASE("csv output has the fixed header") {
    const auto r = invoke({"--format", "csv", "verify", "dirichlet"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("transform,corpus,p,p1,lambda,lhs,rhs_proof,rhs_statement,slack,verdict\n", 0) == 0);
  }

  TEST_CASE("exit status is a function of verdicts and flags") {
    using qfourier::Verdict;
    using qfourier::cli::exit_status;
    CHECK(exit_status({Verdict::pass, Verdict::pass}, false) == 0);
    CHECK(exit_status({Verdict::pass, Verdict::untrusted}, false) == 1);
    CHECK(exit_status({Verdict::pass, Verdict::untrusted}, true) == 0);
    CHECK(exit_status({Verdict::untrusted, Verdict::fail}, true) == 1);
    CHECK(exit_status({}, false) == 0);
  }
}
