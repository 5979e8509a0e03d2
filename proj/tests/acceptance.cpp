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

// Acceptance runner: evaluates criteria 1-11 and prints one PASS/FAIL line each.
// Usage: qfourier_acceptance <path-to-qfourier-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qfourier/norms.hpp"
#include "qfourier/verify.hpp"

using namespace qfourier;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<Exponent> hy_exponents() { return {Exponent(1.0), Exponent(4.0 / 3.0), Exponent(2.0)}; }

Window unit_bump_window() { return Window::separable({0, 1, 1}, {0, 1, 1}); }

Corpus gaussian_corpus(const GridSpec& g) {
  Corpus c;
  for (double s : {0.5, 1.0, 2.0}) {
    c.push_back(make_entry("gauss_s" + fmt(s), GaussianModel{s, 0.0}, g));
  }
  return c;
}

Outcome hq_unitarity() {
  const GridSpec g = default_grid();
  double worst = 0.0;
  bool ok = true;
  for (const auto& q : {QuadraticPhase(1, 1, 1, 1, 1), QuadraticPhase(1, -1, 0, 2, 0)}) {
    for (const auto& r : check_unitarity_HQ(q, gaussian_corpus(g))) {
      worst = std::max(worst, r.deviation);
      ok = ok && r.verdict == Verdict::pass;
    }
  }
  return {ok && worst <= 1e-3, "max |ratio - 1| = " + fmt(worst) + " (limit 1e-3)"};
}

Outcome hq_hausdorff_young() {
  const GridSpec g = default_grid();
  bool ok = true;
  double worst_excess = -1e300, worst_equality = 0.0;
  const auto spec = TransformSpec::hq(QuadraticPhase(1, 1, 1, 1, 1));
  for (const auto& r : check_hausdorff_young(spec, default_corpus(g), hy_exponents())) {
    const double excess = (r.lhs - r.rhs_proof) / r.norm_f;
    worst_excess = std::max(worst_excess, excess);
    ok = ok && excess <= 1e-3 && r.verdict == Verdict::pass;
    if (r.p.value() == 2.0) {
      const double gap = std::abs(r.lhs - r.norm_f) / r.norm_f;
      worst_equality = std::max(worst_equality, gap);
      ok = ok && gap <= 2e-3;
    }
  }
  return {ok, "max (lhs - rhs)/||f||_p = " + fmt(worst_excess) + "; p=2 equality gap = " +
                  fmt(worst_equality) + " (limit 2e-3)"};
}

Outcome t_lambda_endpoints() {
  const GridSpec g = default_grid();
  const Window w = unit_bump_window();
  const QuadraticPhase q(0, 1, 0, 0, 0);
  double worst_ratio = 0.0;
  bool ok = true;
  for (double lambda : {1.0, 4.0, 16.0, 64.0}) {
    for (const auto& r :
         check_hausdorff_young(TransformSpec::t_lambda(q, w, lambda), default_corpus(g), {Exponent(1.0)})) {
      worst_ratio = std::max(worst_ratio, r.lhs / r.rhs_proof);
      ok = ok && r.lhs <= r.rhs_proof * (1 + 1e-12);
    }
  }
  const auto decay = check_T_lambda_L2_decay(q, w, {1, 4, 16, 64});
  const double c1 = w.sup_bound();
  ok = ok && decay.max_scaled <= 1.05 * c1 && decay.verdict == Verdict::pass;
  return {ok, "p=1 max lhs/rhs = " + fmt(worst_ratio) + "; p=2 max sigma*sqrt(lambda) = " +
                  fmt(decay.max_scaled) + " at lambda " + fmt(decay.argmax_lambda) + " (limit " +
                  fmt(1.05 * c1) + ")"};
}

Outcome t_lambda_interpolated() {
  const GridSpec g = default_grid();
  const Window w = unit_bump_window();
  const double c1 = w.sup_bound();
  const double bound = std::sqrt(c1) * std::sqrt(c1 / 4.0);
  double worst = 0.0;
  bool ok = true;
  const auto spec = TransformSpec::t_lambda(QuadraticPhase(0, 1, 0, 0, 0), w, 16.0);
  for (const auto& r : check_hausdorff_young(spec, default_corpus(g), {Exponent(4.0 / 3.0)})) {
    const double ratio = r.lhs / r.norm_f;
    worst = std::max(worst, ratio);
    ok = ok && ratio <= 1.05 * bound && r.verdict != Verdict::untrusted;
  }
  return {ok, "max ||Tf||_4/||f||_4/3 = " + fmt(worst) + " (bound " + fmt(bound) + " + 5%)"};
}

Outcome f_bounds() {
  const GridSpec g = default_grid();
  const Window w = unit_bump_window();
  const QuadraticPhase q(1, 1, 1, 1, 1);
  const double c1 = w.sup_bound(), diam = w.diameter();
  double worst = 0.0, worst_l2_slack = 1e300;
  bool ok = true;
  for (const auto& spec : {TransformSpec::f1(q, w), TransformSpec::f2(q, w)}) {
    for (const auto& r : check_hausdorff_young(spec, default_corpus(g), hy_exponents())) {
      const double bound = c1 * std::pow(diam, 2.0 - 2.0 / r.p.value());
      const double ratio = (r.lhs / r.norm_f) / bound;
      worst = std::max(worst, ratio);
      ok = ok && ratio <= 1.05 && r.verdict != Verdict::untrusted;
      if (spec.family == Family::f1 && r.p.value() == 2.0) {
        const double rel = r.slack / r.rhs_proof;
        worst_l2_slack = std::min(worst_l2_slack, rel);
        ok = ok && rel >= -1e-6;
      }
    }
  }
  return {ok, "max ratio/bound = " + fmt(worst) + "; min F1 p=2 relative slack = " + fmt(worst_l2_slack)};
}

Outcome beckner() {
  const auto r = beckner_check(Exponent(4.0 / 3.0));
  const double closed = oracle::sharp_hy_constant(4, 3, 1);
  const double vs_closed = std::abs(r.ratio - closed) / closed;
  const double vs_listed = std::abs(r.ratio - 0.93670) / 0.93670;
  const bool ok = vs_listed <= 0.01 && r.relative_error <= 2e-3 &&
                  std::abs(r.constant - closed) <= 1e-12 && vs_closed <= 2e-3;
  return {ok, "ratio = " + fmt(r.ratio) + ", constant = " + fmt(r.constant) + ", relative error " +
                  fmt(r.relative_error)};
}

Outcome oscillatory_decay() {
  const std::vector<double> lambdas = {16, 64, 256, 1024, 4096};
  const Window chi = Window::bump1d({0, 1, 1});
  const auto two = estimate_oscillatory_decay(HomogeneousPhase(2, {1.0}), chi, lambdas);
  const auto three = estimate_oscillatory_decay(HomogeneousPhase(3, {1.0, 1.0}), chi, lambdas);
  const bool slope_ok = std::abs(two.slope + 0.5) <= 0.05 && two.verdict == Verdict::pass;
  const bool lower_half = three.argmax_lambda <= std::sqrt(lambdas.front() * lambdas.back());
  std::string scaled;
  for (double s : three.scaled) scaled += (scaled.empty() ? "" : ",") + fmt(s);
  return {slope_ok && lower_half && three.verdict == Verdict::pass,
          "n=2 slope = " + fmt(two.slope) + "; n=3 lambda^(1/3)||T|| = [" + scaled + "], max at lambda " +
              fmt(three.argmax_lambda)};
}

Outcome dirichlet() {
  const GridSpec g = default_grid();
  const auto step = check_dirichlet_limit(make_entry("step", StepModel{-1, 1}, g), 1.0, {50, 100, 200});
  const auto gauss =
      check_dirichlet_limit(make_entry("gauss", GaussianModel{1.0, 0.0}, g), 0.0, {50, 100, 200});
  const double step_err = std::abs(step.approximants.back() - 0.5);
  const bool ok = step_err <= 0.03 && gauss.errors.back() <= gauss.errors.front();
  return {ok, "step |A_200 - 0.5| = " + fmt(step_err) + "; gaussian error 50 -> 200: " +
                  fmt(gauss.errors.front()) + " -> " + fmt(gauss.errors.back())};
}

Outcome oracle_equivalence() {
  const auto reports = oracle_suite();
  double worst_fast = 0.0, worst_svd = 0.0;
  std::size_t fails = 0;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::pass) ++fails;
    if (r.name.find("svd") != std::string::npos) {
      worst_svd = std::max(worst_svd, r.relative_error);
    } else {
      worst_fast = std::max(worst_fast, r.relative_error);
    }
  }
  return {fails == 0 && !reports.empty(), std::to_string(reports.size()) + " checks, max fast error " +
                                              fmt(worst_fast) + ", max svd error " + fmt(worst_svd)};
}

Outcome minkowski() {
  const auto reports = minkowski_suite(100, {1, 1.5, 2, 3}, 20260101);
  std::size_t violations = 0;
  for (const auto& r : reports) violations += r.verdict != Verdict::pass;
  return {violations == 0 && reports.size() == 400,
          std::to_string(reports.size()) + " checks, " + std::to_string(violations) + " violations"};
}

Outcome determinism(const std::string& cli) {
  const auto dir = std::filesystem::temp_directory_path() / "qfourier_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto run = [&](const std::string& name) {
    const auto path = dir / name;
    const std::string cmd = "\"" + cli + "\" --out \"" + path.string() +
                            "\" verify hy,unitarity,dirichlet,minkowski >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(path, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    return std::make_pair(status, bytes.str());
  };
  const auto a = run("a.json");
  const auto b = run("b.json");
  const bool ok = !a.second.empty() && a.second == b.second;
  return {ok, std::to_string(a.second.size()) + " bytes, identical = " + (ok ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: qfourier_acceptance <qfourier-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"HQ unitarity", hq_unitarity},
      {"HQ Hausdorff-Young", hq_hausdorff_young},
      {"T_lambda endpoints", t_lambda_endpoints},
      {"T_lambda interpolated bound", t_lambda_interpolated},
      {"F1/F2 bounds", f_bounds},
      {"Beckner sharpness", beckner},
      {"oscillatory decay", oscillatory_decay},
      {"Dirichlet limit", dirichlet},
      {"oracle equivalence", oracle_equivalence},
      {"Minkowski suite", minkowski},
      {"determinism", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": "
              << o.detail << " [" << fmt(secs) << " s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
