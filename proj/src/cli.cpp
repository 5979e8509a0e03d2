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

#include "qfourier/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "qfourier/transform_io.hpp"

namespace qfourier::cli {

namespace {

const std::map<std::string, std::vector<std::string>>& key_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"hy", {"family", "p", "phase", "window", "lambda", "z_sign", "degree", "coeffs"}},
      {"unitarity", {"phase", "z_sign"}},
      {"tdecay", {"phase", "window", "lambdas"}},
      {"oscdecay", {"degree", "coeffs", "window", "lambdas"}},
      {"dirichlet", {"entry", "x", "lambdas", "tolerance"}},
      {"minkowski", {"tables", "s", "seed"}},
      {"oracle", {"specs", "nodes", "seed"}},
  };
  return table;
}

Json defaults(const std::string& suite) {
  if (suite == "hy") {
    return {{"family", "hq"},        {"p", "1,1.3333333333333333,2"}, {"phase", "1,1,1,1,1"},
            {"window", nullptr},     {"lambda", 16.0},                {"z_sign", 1},
            {"degree", 2},           {"coeffs", "1"}};
  }
  if (suite == "unitarity") return {{"phase", "1,1,1,1,1"}, {"z_sign", 1}};
  if (suite == "tdecay") {
    return {{"phase", "0,1,0,0,0"}, {"window", "separable:0,1,0,1"}, {"lambdas", "1,4,16,64"}};
  }
  if (suite == "oscdecay") {
    return {{"degree", 2},
            {"coeffs", "1"},
            {"window", "bump:0,1"},
            {"lambdas", "16,64,256,1024,4096"}};
  }
  if (suite == "dirichlet") {
    return {{"entry", "step:-1,1"}, {"x", 1.0}, {"lambdas", "50,100,200"}, {"tolerance", 0.03}};
  }
  if (suite == "minkowski") return {{"tables", 100}, {"s", "1,1.5,2,3"}, {"seed", 20260101}};
  if (suite == "oracle") return {{"specs", 20}, {"nodes", 512}, {"seed", 20260101}};
  throw ConfigError("unknown suite '" + suite + "'");
}

class Params {
 public:
  Params(std::string suite, Json values) : suite_(std::move(suite)), values_(std::move(values)) {}

  const Json& raw(const std::string& key) const {
    if (!values_.contains(key)) throw ConfigError(where(key) + " is missing");
    return values_.at(key);
  }

  bool is_null(const std::string& key) const { return raw(key).is_null(); }

  std::string text(const std::string& key) const {
    const Json& v = raw(key);
    if (!v.is_string()) throw ConfigError(where(key) + " must be a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) const {
    const Json& v = raw(key);
    try {
      if (v.is_number()) return {v.get<double>()};
      if (v.is_string()) return parse_number_list(v.get<std::string>());
      if (v.is_array()) {
        std::vector<double> out;
        for (const auto& x : v) {
          if (!x.is_number()) throw ConfigError(where(key) + " must hold numbers");
          out.push_back(x.get<double>());
        }
        return out;
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where(key) + ": " + e.what());
    }
    throw ConfigError(where(key) + " must be a number, list or string");
  }

  double number(const std::string& key) const {
    const auto v = numbers(key);
    if (v.size() != 1) throw ConfigError(where(key) + " must be a single number");
    return v[0];
  }

  long long integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) {
      throw ConfigError(where(key) + " must be an integer");
    }
    return static_cast<long long>(v);
  }

  std::size_t count(const std::string& key) const {
    const long long v = integer(key);
    if (v < 1) throw ConfigError(where(key) + " must be positive");
    return static_cast<std::size_t>(v);
  }

  Window window(const std::string& key) const {
    const Json& v = raw(key);
    try {
      if (v.is_string()) return parse_window(v.get<std::string>());
      if (v.is_object()) return window_from_json(nlohmann::json(v));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where(key) + ": " + e.what());
    }
    throw ConfigError(where(key) + " must be a string or object");
  }

  QuadraticPhase quadratic(const std::string& key) const {
    const auto c = numbers(key);
    try {
      return QuadraticPhase::from_coefficients(c);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where(key) + ": " + e.what());
    }
  }

  HomogeneousPhase homogeneous() const {
    const long long n = integer("degree");
    try {
      return HomogeneousPhase(static_cast<int>(n), numbers("coeffs"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(suite_ + ": " + e.what());
    }
  }

  const Json& values() const { return values_; }

 private:
  std::string where(const std::string& key) const { return suite_ + "." + key; }

  std::string suite_;
  Json values_;
};

Params effective_params(const RunConfig& config, const std::string& suite) {
  Json values = defaults(suite);
  if (config.params.contains(suite)) {
    const auto& block = config.params.at(suite);
    if (!block.is_object()) throw ConfigError("parameters for suite '" + suite + "' must be an object");
    const auto& keys = suite_keys(suite);
    for (const auto& [key, value] : block.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ConfigError("suite '" + suite + "' has no parameter '" + key + "'");
      }
      values[key] = value;
    }
  }
  return Params(suite, std::move(values));
}

std::vector<Exponent> exponents(const Params& params) {
  std::vector<Exponent> out;
  for (double p : params.numbers("p")) {
    if (!(p >= 1.0 && p <= 2.0)) {
      throw ConfigError("hy.p values must lie in [1, 2], got " + format_number(p, 9));
    }
    out.emplace_back(p);
  }
  return out;
}

TransformSpec hy_spec(const Params& params) {
  Family family;
  try {
    family = family_from_string(params.text("family"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("hy.family: ") + e.what());
  }
  auto window = [&]() {
    if (!params.is_null("window")) return params.window("window");
    return parse_window(family == Family::oscillatory ? "bump:0,1" : "separable:0,1,0,1");
  };
  try {
    switch (family) {
      case Family::t_lambda:
        return TransformSpec::t_lambda(params.quadratic("phase"), window(), params.number("lambda"));
      case Family::f1: return TransformSpec::f1(params.quadratic("phase"), window());
      case Family::f2: return TransformSpec::f2(params.quadratic("phase"), window());
      case Family::hq:
        return TransformSpec::hq(params.quadratic("phase"),
                                 static_cast<int>(params.integer("z_sign")));
      case Family::oscillatory:
        return TransformSpec::oscillatory(params.homogeneous(), window(), params.number("lambda"));
      case Family::fourier: break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("hy: ") + e.what());
  }
  throw ConfigError("hy.family: the plain Fourier family has no Hausdorff-Young suite");
}

CorpusEntry resolve_entry(const std::string& text, const Corpus& corpus, const GridSpec& grid) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    for (const auto& e : corpus) {
      if (e.id == text) return e;
    }
    throw ConfigError("dirichlet.entry: no corpus entry '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  std::vector<double> v;
  try {
    v = parse_number_list(text.substr(colon + 1));
    if (kind == "step" && v.size() == 2) return make_entry(text, StepModel{v[0], v[1]}, grid);
    if (kind == "gaussian" && (v.size() == 1 || v.size() == 2)) {
      return make_entry(text, GaussianModel{v[0], v.size() == 2 ? v[1] : 0.0}, grid);
    }
    if (kind == "bump" && (v.size() == 2 || v.size() == 3)) {
      return make_entry(text, BumpModel{{v[0], v[1], v.size() == 3 ? v[2] : 1.0}}, grid);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("dirichlet.entry: " + std::string(e.what()));
  }
  throw ConfigError("dirichlet.entry must be a corpus id, step:a,b, gaussian:sigma[,center] or "
                    "bump:center,radius[,amplitude]");
}

std::vector<double> lambda_list(const Params& params) {
  auto v = params.numbers("lambdas");
  if (v.empty()) throw ConfigError("lambdas must not be empty");
  return v;
}

void run_suite(const std::string& suite, const Params& params, const RunConfig& config,
               const Corpus& corpus, ReportDocument& doc) {
  Json& meta_spec = doc.meta()["spec"][suite];
  meta_spec = params.values();
  try {
    if (suite == "hy") {
      const auto spec = hy_spec(params);
      meta_spec["transform"] = to_json(spec);
      for (const auto& r : check_hausdorff_young(spec, corpus, exponents(params))) doc.add(r);
    } else if (suite == "unitarity") {
      const auto q = params.quadratic("phase");
      for (const auto& r :
           check_unitarity_HQ(q, corpus, static_cast<int>(params.integer("z_sign")))) {
        doc.add(r);
      }
    } else if (suite == "tdecay") {
      DecayOptions options;
      options.base = config.grid;
      doc.add(check_T_lambda_L2_decay(params.quadratic("phase"), params.window("window"),
                                      lambda_list(params), options));
    } else if (suite == "oscdecay") {
      DecayOptions options;
      options.base = config.grid;
      doc.add(estimate_oscillatory_decay(params.homogeneous(), params.window("window"),
                                         lambda_list(params), options));
    } else if (suite == "dirichlet") {
      const auto entry = resolve_entry(params.text("entry"), corpus, config.grid);
      doc.add(check_dirichlet_limit(entry, params.number("x"), lambda_list(params),
                                    params.number("tolerance")));
    } else if (suite == "minkowski") {
      for (const auto& r : minkowski_suite(params.count("tables"), params.numbers("s"),
                                           static_cast<std::uint64_t>(params.integer("seed")))) {
        doc.add(r);
      }
    } else if (suite == "oracle") {
      OracleOptions options;
      options.specs = params.count("specs");
      options.nodes = params.count("nodes");
      options.seed = static_cast<std::uint64_t>(params.integer("seed"));
      for (const auto& r : oracle_suite(options)) doc.add(r);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(suite + ": " + e.what());
  }
}

std::vector<std::string> split_suites(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), item) == names.end()) {
      throw ConfigError("unknown suite '" + item + "'");
    }
    out.push_back(item);
  }
  return out;
}

GridSpec grid_from_config(const Json& j) {
  try {
    if (j.is_string()) return parse_grid(j.get<std::string>());
    if (j.is_object()) return grid_from_json(nlohmann::json(j));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
  throw ConfigError("grid must be a string lo,hi,count or an object");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hy",        "unitarity", "tdecay", "oscdecay",
                                                 "dirichlet", "minkowski", "oracle"};
  return names;
}

const std::vector<std::string>& suite_keys(const std::string& suite) {
  const auto& table = key_table();
  const auto it = table.find(suite);
  if (it == table.end()) throw ConfigError("unknown suite '" + suite + "'");
  return it->second;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig config;
  const auto base = path.parent_path();
  for (const auto& [key, value] : j.items()) {
    if (key == "grid") {
      config.grid = grid_from_config(value);
    } else if (key == "corpus") {
      if (!value.is_string()) throw ConfigError("corpus must be a path string");
      std::filesystem::path p = value.get<std::string>();
      config.corpus_path = p.is_absolute() ? p : base / p;
      if (!std::filesystem::exists(*config.corpus_path)) {
        throw ConfigError("corpus file " + config.corpus_path->string() + " does not exist");
      }
    } else if (key == "format") {
      if (!value.is_string()) throw ConfigError("format must be json or csv");
      try {
        config.format = format_from_string(value.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "out") {
      if (!value.is_string()) throw ConfigError("out must be a path string");
      config.out = value.get<std::string>();
    } else if (key == "allow_untrusted") {
      if (!value.is_boolean()) throw ConfigError("allow_untrusted must be true or false");
      config.allow_untrusted = value.get<bool>();
    } else if (key == "suites") {
      if (!value.is_array()) throw ConfigError("suites must be an array of names");
      for (const auto& s : value) {
        if (!s.is_string()) throw ConfigError("suites must be an array of names");
        for (auto& name : split_suites(s.get<std::string>())) config.suites.push_back(name);
      }
    } else if (key_table().count(key)) {
      config.params[key] = value;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return config;
}

int exit_status(const std::vector<Verdict>& verdicts, bool allow_untrusted) {
  for (Verdict v : verdicts) {
    if (v == Verdict::fail) return 1;
    if (v == Verdict::untrusted && !allow_untrusted) return 1;
  }
  return 0;
}

RunOutcome run(const RunConfig& config) {
  if (config.suites.empty()) throw ConfigError("no suite selected");
  Corpus corpus;
  try {
    corpus = config.corpus_path ? load_corpus(*config.corpus_path, config.grid)
                                : default_corpus(config.grid);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("corpus: ") + e.what());
  }

  Json meta;
  meta["grid"] = to_json(config.grid);
  meta["spec"] = Json::object();
  meta["version"] = version();
  ReportDocument doc(std::move(meta));
  for (const auto& suite : suite_names()) {
    if (std::find(config.suites.begin(), config.suites.end(), suite) == config.suites.end()) {
      continue;
    }
    run_suite(suite, effective_params(config, suite), config, corpus, doc);
  }

  RunOutcome outcome;
  outcome.report = doc.render(config.format);
  outcome.verdicts = doc.verdicts();
  outcome.exit_code = exit_status(outcome.verdicts, config.allow_untrusted);
  if (config.out) write_atomically(*config.out, outcome.report);
  return outcome;
}

void print_constants(std::ostream& out, const Exponent& p, const ConstantsParams& c) {
  const Exponent p1 = conjugate_exponent(p);
  auto cell = [](double v) {
    std::ostringstream os;
    os << std::left << std::setw(18) << format_number(v, 9);
    return os.str();
  };
  out << "p = " << format_number(p.value(), 9) << "  p1 = "
      << (p1.is_infinite() ? std::string("inf") : format_number(p1.value(), 9))
      << "  alpha = " << format_number(interpolation_alpha(p), 9) << "\n";
  out << "C1 = " << format_number(c.c1, 9) << "  lambda = " << format_number(c.lambda, 9)
      << "  R = " << format_number(c.diameter, 9) << "  b = " << format_number(c.b, 9)
      << "  n = " << c.dimension << "  |M_y| = " << format_number(c.support_length, 9) << "\n\n";
  out << std::left << std::setw(16) << "constant" << std::setw(18) << "proof"
      << "statement\n";
  auto row = [&](const char* name, double proof, double statement) {
    out << std::left << std::setw(16) << name << cell(proof) << format_number(statement, 9) << "\n";
  };
  row("T_lambda", bound_T_lambda(c.c1, c.lambda, p), bound_T_lambda_statement(c.c1, c.lambda, p));
  row("F1/F2", bound_F(c.c1, c.diameter, p), bound_F_statement(c.c1, c.diameter, p));
  const double hq = bound_HQ(c.b, p);
  row("HQ", hq, hq);
  const double osc = bound_oscillatory(c.c1, c.support_length, p);
  row("oscillatory", osc, osc);
  const double beckner = beckner_constant(p, c.dimension);
  row("beckner", beckner, beckner);
}

void list_corpus(std::ostream& out, const Corpus& corpus) {
  out << std::left << std::setw(20) << "id" << std::setw(20) << "kind" << "description\n";
  for (const auto& e : corpus) {
    out << std::left << std::setw(20) << e.id << std::setw(20) << kind_name(e.model)
        << e.description << "\n";
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of Hausdorff-Young type bounds for quadratic-phase Fourier "
               "operators",
               "qfourier"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(version()));

  std::string grid_text, out_path, format_text, config_path, corpus_path;
  bool allow_untrusted = false;
  auto* grid_opt = app.add_option("--grid", grid_text, "Sample grid lo,hi,count");
  auto* out_opt = app.add_option("--out", out_path, "Report path (default: standard output)");
  auto* format_opt = app.add_option("--format", format_text, "Report format")
                         ->check(CLI::IsMember({"json", "csv"}));
  auto* untrusted_opt =
      app.add_flag("--allow-untrusted", allow_untrusted, "Do not fail on under-resolved results");
  auto* config_opt = app.add_option("--config", config_path, "JSON run configuration");
  auto* corpus_opt = app.add_option("--corpus", corpus_path, "JSON corpus file");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite_text;
  verify->add_option("suite", suite_text, "Suite name or comma-separated list");
  const std::vector<std::pair<std::string, std::string>> flag_keys = {
      {"--family", "family"}, {"--p", "p"},           {"--phase", "phase"},
      {"--window", "window"}, {"--lambda", "lambda"}, {"--lambdas", "lambdas"},
      {"--z-sign", "z_sign"}, {"--degree", "degree"}, {"--coeffs", "coeffs"},
      {"--entry", "entry"},   {"--x", "x"},           {"--s", "s"},
      {"--tables", "tables"}, {"--seed", "seed"},     {"--specs", "specs"},
      {"--nodes", "nodes"},   {"--tolerance", "tolerance"}};
  std::map<std::string, std::string> flag_values;
  std::vector<std::pair<CLI::Option*, std::string>> flag_options;
  for (const auto& [flag, key] : flag_keys) {
    flag_options.emplace_back(verify->add_option(flag, flag_values[key], "Suite parameter " + key),
                              key);
  }

  auto* constants = app.add_subcommand("constants", "Print bound constants");
  std::string p_text = "1.3333333333333333";
  ConstantsParams cp;
  constants->add_option("--p", p_text, "Exponent p in [1, 2]");
  constants->add_option("--c1", cp.c1, "Window sup bound C1");
  constants->add_option("--lambda", cp.lambda, "Frequency parameter");
  constants->add_option("--diameter", cp.diameter, "Support diameter R");
  constants->add_option("--b", cp.b, "Mixed coefficient b");
  constants->add_option("--n", cp.dimension, "Dimension for the sharp constant");
  constants->add_option("--support", cp.support_length, "Cutoff support length");

  auto* corpus_cmd = app.add_subcommand("corpus", "Inspect the function corpus");
  std::string action;
  corpus_cmd->add_option("action", action, "Action")->required()->check(CLI::IsMember({"list"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    GridSpec grid = default_grid();
    if (*grid_opt) grid = parse_grid(grid_text);

    if (*constants) {
      double p = 0.0;
      const auto v = parse_number_list(p_text);
      if (v.size() != 1) throw ConfigError("--p takes one exponent");
      p = v[0];
      if (!(p >= 1.0 && p <= 2.0)) throw ConfigError("--p must lie in [1, 2]");
      print_constants(out, Exponent(p), cp);
      return 0;
    }

    if (*corpus_cmd) {
      const Corpus corpus =
          *corpus_opt ? load_corpus(corpus_path, grid) : default_corpus(grid);
      list_corpus(out, corpus);
      return 0;
    }

    RunConfig config = *config_opt ? load_config(config_path) : RunConfig{};
    if (*grid_opt) config.grid = grid;
    if (*corpus_opt) {
      if (!std::filesystem::exists(corpus_path)) {
        throw ConfigError("corpus file " + corpus_path + " does not exist");
      }
      config.corpus_path = corpus_path;
    }
    if (*format_opt) config.format = format_from_string(format_text);
    if (*out_opt) config.out = out_path;
    if (*untrusted_opt) config.allow_untrusted = true;
    if (!suite_text.empty()) config.suites = split_suites(suite_text);
    if (config.suites.empty()) throw ConfigError("verify needs a suite name or a config with suites");

    for (const auto& [opt, key] : flag_options) {
      if (!*opt) continue;
      bool used = false;
      for (const auto& suite : config.suites) {
        const auto& keys = suite_keys(suite);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) continue;
        config.params[suite][key] = flag_values[key];
        used = true;
      }
      if (!used) throw ConfigError(opt->get_name() + " does not apply to the selected suites");
    }

    const auto outcome = run(config);
    if (!config.out) out << outcome.report;
    return outcome.exit_code;
  } catch (const ConfigError& e) {
    err << "qfourier: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "qfourier: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "qfourier: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qfourier::cli
