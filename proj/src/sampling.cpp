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

#include "qfourier/sampling.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qfourier {

GridSpec::GridSpec(double lo, double hi, std::size_t count) : lo_(lo), hi_(hi), count_(count) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("grid requires finite lo < hi");
  }
  if (count < 2) {
    throw std::invalid_argument("grid requires at least 2 nodes");
  }
  h_ = (hi - lo) / static_cast<double>(count - 1);
  if (!(h_ > 0.0)) {
    throw std::invalid_argument("grid spacing underflows");
  }
}

double GridSpec::node(std::size_t j) const {
  return std::fma(static_cast<double>(j), h_, lo_);
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> out(count_);
  for (std::size_t j = 0; j < count_; ++j) out[j] = node(j);
  return out;
}

double GridSpec::weight(std::size_t j) const {
  return (j == 0 || j + 1 == count_) ? 0.5 * h_ : h_;
}

std::vector<double> GridSpec::weights() const {
  std::vector<double> out(count_, h_);
  out.front() = 0.5 * h_;
  out.back() = 0.5 * h_;
  return out;
}

GridSpec default_grid() { return {-16.0, 16.0, 4096}; }

SampledFunction1D::SampledFunction1D(GridSpec grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count()) {
    throw std::invalid_argument("sample count does not match grid");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("sampled function contains non-finite values");
    }
  }
}

SampledFunction1D SampledFunction1D::zeros(const GridSpec& grid) {
  return {grid, std::vector<cplx>(grid.count())};
}

double BumpProfile::operator()(double t) const {
  const double u = (t - center) / radius;
  if (!(std::abs(u) < 1.0)) return 0.0;
  return amplitude * std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double Box::diameter() const { return std::hypot(x1 - x0, y1 - y0); }

const char* to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::bump1d: return "bump1d";
    case WindowKind::separable2d: return "separable2d";
    case WindowKind::box2d: return "box2d";
    case WindowKind::general2d: return "general2d";
  }
  return "?";
}

namespace {

void check_profile(const BumpProfile& p) {
  if (!std::isfinite(p.center) || !(p.radius > 0.0) || !std::isfinite(p.radius) ||
      !std::isfinite(p.amplitude)) {
    throw std::invalid_argument("bump needs finite center, amplitude and radius > 0");
  }
}

}  // namespace

Window Window::bump1d(BumpProfile profile) {
  check_profile(profile);
  Window w;
  w.kind_ = WindowKind::bump1d;
  w.y_profile_ = profile;
  w.x_profile_ = profile;
  w.support_ = {profile.lo(), profile.hi(), profile.lo(), profile.hi()};
  w.sup_bound_ = std::abs(profile.amplitude);
  return w;
}

Window Window::separable(BumpProfile x_profile, BumpProfile y_profile) {
  check_profile(x_profile);
  check_profile(y_profile);
  Window w;
  w.kind_ = WindowKind::separable2d;
  w.x_profile_ = x_profile;
  w.y_profile_ = y_profile;
  w.support_ = {x_profile.lo(), x_profile.hi(), y_profile.lo(), y_profile.hi()};
  w.sup_bound_ = std::abs(x_profile.amplitude * y_profile.amplitude);
  return w;
}

Window Window::box(Box support, double amplitude) {
  if (!(support.x0 < support.x1) || !(support.y0 < support.y1) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("box window needs x0 < x1, y0 < y1 and finite amplitude");
  }
  Window w;
  w.kind_ = WindowKind::box2d;
  w.support_ = support;
  w.amplitude_ = amplitude;
  w.sup_bound_ = std::abs(amplitude);
  return w;
}

Window Window::general(std::function<double(double, double)> fn, Box support, double sup_bound) {
  if (!fn) throw std::invalid_argument("general window needs a callable");
  if (!(support.x0 < support.x1) || !(support.y0 < support.y1) || !(sup_bound >= 0.0)) {
    throw std::invalid_argument("general window needs a proper box and sup bound >= 0");
  }
  Window w;
  w.kind_ = WindowKind::general2d;
  w.support_ = support;
  w.sup_bound_ = sup_bound;
  w.general_ = std::move(fn);
  return w;
}

double Window::x_factor(double x) const {
  switch (kind_) {
    case WindowKind::bump1d: return 1.0;
    case WindowKind::separable2d: return x_profile_(x);
    case WindowKind::box2d: return support_.contains_x(x) ? amplitude_ : 0.0;
    case WindowKind::general2d: break;
  }
  throw std::logic_error("general window has no separable factors");
}

double Window::y_factor(double y) const {
  switch (kind_) {
    case WindowKind::bump1d:
    case WindowKind::separable2d: return y_profile_(y);
    case WindowKind::box2d: return support_.contains_y(y) ? 1.0 : 0.0;
    case WindowKind::general2d: break;
  }
  throw std::logic_error("general window has no separable factors");
}

double Window::operator()(double x, double y) const {
  if (kind_ == WindowKind::general2d) {
    if (!support_.contains_x(x) || !support_.contains_y(y)) return 0.0;
    return general_(x, y);
  }
  return x_factor(x) * y_factor(y);
}

double Window::diameter() const {
  if (kind_ == WindowKind::bump1d) return support_.y1 - support_.y0;
  return support_.diameter();
}

double bump_eval(const Window& w, double t) {
  if (w.kind() != WindowKind::bump1d) {
    throw std::invalid_argument("bump_eval requires a bump1d window");
  }
  return w.y_profile()(t);
}

namespace {

double gaussian(double x, double sigma, double center) {
  const double u = (x - center) / sigma;
  return std::exp(-0.5 * u * u);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

cplx evaluate(const FunctionModel& model, double x) {
  return std::visit(
      overloaded{
          [x](const GaussianModel& g) { return cplx(gaussian(x, g.sigma, g.center)); },
          [x](const BumpModel& b) { return cplx(b.profile(x)); },
          [x](const StepModel& s) { return cplx((x >= s.a && x <= s.b) ? 1.0 : 0.0); },
          [x](const ModulatedGaussianModel& m) {
            return gaussian(x, m.sigma, m.center) * std::polar(1.0, m.omega * x);
          },
      },
      model);
}

OneSidedLimits one_sided_limits(const FunctionModel& model, double x) {
  if (const auto* s = std::get_if<StepModel>(&model)) {
    const double left = (x > s->a && x <= s->b) ? 1.0 : 0.0;
    const double right = (x >= s->a && x < s->b) ? 1.0 : 0.0;
    return {cplx(left), cplx(right)};
  }
  const cplx v = evaluate(model, x);
  return {v, v};
}

SampledFunction1D sample(const FunctionModel& model, const GridSpec& grid) {
  std::vector<cplx> values(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) values[j] = evaluate(model, grid.node(j));
  return {grid, std::move(values)};
}

std::string kind_name(const FunctionModel& model) {
  return std::visit(overloaded{
                        [](const GaussianModel&) { return std::string("gaussian"); },
                        [](const BumpModel&) { return std::string("bump"); },
                        [](const StepModel&) { return std::string("step"); },
                        [](const ModulatedGaussianModel&) {
                          return std::string("modulated_gaussian");
                        },
                    },
                    model);
}

SampledFunction1D make_gaussian(const GridSpec& grid, double sigma, double center) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian needs sigma > 0");
  return sample(GaussianModel{sigma, center}, grid);
}

SampledFunction1D make_step(const GridSpec& grid, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("step needs a < b");
  if (!(a > grid.lo() && b < grid.hi())) {
    throw std::invalid_argument("step jumps must lie inside the grid");
  }
  return sample(StepModel{a, b}, grid);
}

SampledFunction1D make_bump(const GridSpec& grid, const BumpProfile& profile) {
  check_profile(profile);
  return sample(BumpModel{profile}, grid);
}

SampledFunction1D make_modulated_gaussian(const GridSpec& grid, double sigma, double center,
                                          double omega) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian needs sigma > 0");
  return sample(ModulatedGaussianModel{sigma, center, omega}, grid);
}

SampledFunction1D chirp_premodulate(const SampledFunction1D& f, const QuadraticPhase& q,
                                    double lambda, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("chirp sign must be +1 or -1");
  const auto& grid = f.grid();
  std::vector<cplx> out(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    const double phase = sign * lambda * q.y_part(grid.node(j));
    out[j] = f[j] * std::polar(1.0, phase);
  }
  return {grid, std::move(out)};
}

CorpusEntry make_entry(std::string id, FunctionModel model, const GridSpec& grid,
                       std::string description) {
  auto function = sample(model, grid);
  return {std::move(id), std::move(model), std::move(function), std::move(description)};
}

Corpus default_corpus(const GridSpec& grid) {
  Corpus corpus;
  corpus.push_back(make_entry("gauss_s0.5", GaussianModel{0.5, 0.0}, grid,
                              "exp(-x^2/(2*0.25))"));
  corpus.push_back(make_entry("gauss_s1", GaussianModel{1.0, 0.0}, grid, "exp(-x^2/2)"));
  corpus.push_back(make_entry("gauss_s2", GaussianModel{2.0, 0.0}, grid, "exp(-x^2/8)"));
  corpus.push_back(make_entry("bump_r1", BumpModel{BumpProfile{0.0, 1.0, 1.0}}, grid,
                              "unit mollifier on [-1,1]"));
  corpus.push_back(make_entry("modgauss_s1_w3", ModulatedGaussianModel{1.0, 0.0, 3.0}, grid,
                              "exp(-x^2/2) exp(3ix)"));
  return corpus;
}

namespace {

double param(const nlohmann::json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  const auto& v = params.at(key);
  if (!v.is_number()) {
    throw std::invalid_argument(std::string("corpus parameter '") + key + "' must be a number");
  }
  return v.get<double>();
}

double required_param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key)) {
    throw std::invalid_argument(std::string("corpus entry missing parameter '") + key + "'");
  }
  return param(params, key, 0.0);
}

}  // namespace

Corpus parse_corpus(const std::string& json_text, const GridSpec& grid) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("corpus must be a JSON array");

  Corpus corpus;
  std::set<std::string> seen;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("id") || !item.contains("kind") ||
        !item.at("id").is_string() || !item.at("kind").is_string()) {
      throw std::invalid_argument("corpus entries need string fields 'id' and 'kind'");
    }
    const auto id = item.at("id").get<std::string>();
    if (!seen.insert(id).second) {
      throw std::invalid_argument("duplicate corpus id '" + id + "'");
    }
    const auto kind = item.at("kind").get<std::string>();
    const nlohmann::json params = item.value("params", nlohmann::json::object());
    const std::string description = item.value("description", std::string());

    if (kind == "gaussian") {
      GaussianModel g{required_param(params, "sigma"), param(params, "center", 0.0)};
      make_gaussian(grid, g.sigma, g.center);
      corpus.push_back(make_entry(id, g, grid, description));
    } else if (kind == "bump") {
      BumpProfile p{param(params, "center", 0.0), required_param(params, "radius"),
                    param(params, "amplitude", 1.0)};
      check_profile(p);
      corpus.push_back(make_entry(id, BumpModel{p}, grid, description));
    } else if (kind == "step") {
      StepModel s{required_param(params, "a"), required_param(params, "b")};
      make_step(grid, s.a, s.b);
      corpus.push_back(make_entry(id, s, grid, description));
    } else if (kind == "modulated_gaussian") {
      ModulatedGaussianModel m{required_param(params, "sigma"), param(params, "center", 0.0),
                               required_param(params, "omega")};
      make_modulated_gaussian(grid, m.sigma, m.center, m.omega);
      corpus.push_back(make_entry(id, m, grid, description));
    } else {
      throw std::invalid_argument("unknown corpus kind '" + kind + "'");
    }
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, const GridSpec& grid) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), grid);
}

}  // namespace qfourier
