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

#include "qfourier/transform_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qfourier {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("expected numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

json profile_json(const BumpProfile& p) {
  return {{"center", p.center}, {"radius", p.radius}, {"amplitude", p.amplitude}};
}

BumpProfile profile_from(const json& j) {
  return {number_or(j, "center", 0.0), number(j, "radius"), number_or(j, "amplitude", 1.0)};
}

}  // namespace

json to_json(const GridSpec& grid) {
  return {{"lo", grid.lo()}, {"hi", grid.hi()}, {"count", grid.count()}};
}

GridSpec grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("count") || !j.at("count").is_number_integer() ||
      j.at("count").get<long long>() < 0) {
    throw std::invalid_argument("grid needs lo, hi and a non-negative integer count");
  }
  return {number(j, "lo"), number(j, "hi"), j.at("count").get<std::size_t>()};
}

json to_json(const Window& w) {
  switch (w.kind()) {
    case WindowKind::bump1d: {
      json out = profile_json(w.y_profile());
      out["kind"] = "bump1d";
      return out;
    }
    case WindowKind::separable2d:
      return {{"kind", "separable2d"},
              {"x", profile_json(w.x_profile())},
              {"y", profile_json(w.y_profile())}};
    case WindowKind::box2d: {
      const Box& b = w.support();
      return {{"kind", "box2d"}, {"x0", b.x0},         {"x1", b.x1},
              {"y0", b.y0},      {"y1", b.y1},         {"amplitude", w.amplitude()}};
    }
    case WindowKind::general2d:
      break;
  }
  throw std::invalid_argument("general2d windows are not serializable");
}

Window window_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("window needs a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "bump1d") return Window::bump1d(profile_from(j));
  if (kind == "separable2d") {
    if (!j.contains("x") || !j.contains("y")) {
      throw std::invalid_argument("separable2d window needs 'x' and 'y' profiles");
    }
    return Window::separable(profile_from(j.at("x")), profile_from(j.at("y")));
  }
  if (kind == "box2d") {
    return Window::box({number(j, "x0"), number(j, "x1"), number(j, "y0"), number(j, "y1")},
                       number_or(j, "amplitude", 1.0));
  }
  throw std::invalid_argument("unknown window kind '" + kind + "'");
}

json to_json(const Phase& phase) {
  if (const auto* q = std::get_if<QuadraticPhase>(&phase)) {
    return {{"kind", "quadratic"},
            {"a", q->a()},
            {"b", q->b()},
            {"c", q->c()},
            {"d", q->d()},
            {"e", q->e()}};
  }
  if (const auto* s = std::get_if<HomogeneousPhase>(&phase)) {
    return {{"kind", "homogeneous"}, {"degree", s->degree()}, {"coeffs", s->coefficients()}};
  }
  return nullptr;
}

Phase phase_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("phase needs a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "quadratic") {
    return QuadraticPhase(number(j, "a"), number(j, "b"), number(j, "c"), number(j, "d"),
                          number(j, "e"));
  }
  if (kind == "homogeneous") {
    if (!j.contains("degree") || !j.at("degree").is_number_integer() || !j.contains("coeffs") ||
        !j.at("coeffs").is_array()) {
      throw std::invalid_argument("homogeneous phase needs integer 'degree' and array 'coeffs'");
    }
    return HomogeneousPhase(j.at("degree").get<int>(), j.at("coeffs").get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown phase kind '" + kind + "'");
}

json to_json(const TransformSpec& spec) {
  json out{{"family", to_string(spec.family)},
           {"phase", to_json(spec.phase)},
           {"window", spec.window ? to_json(*spec.window) : json(nullptr)},
           {"lambda", spec.lambda},
           {"z_sign", spec.z_sign}};
  return out;
}

TransformSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw std::invalid_argument("transform spec needs a string 'family'");
  }
  TransformSpec spec;
  spec.family = family_from_string(j.at("family").get<std::string>());
  spec.phase = phase_from_json(j.value("phase", json(nullptr)));
  if (j.contains("window") && !j.at("window").is_null()) {
    spec.window = window_from_json(j.at("window"));
  }
  spec.lambda = number_or(j, "lambda", 1.0);
  if (j.contains("z_sign")) {
    if (!j.at("z_sign").is_number_integer()) throw std::invalid_argument("z_sign must be +1 or -1");
    spec.z_sign = j.at("z_sign").get<int>();
  }
  spec.validate();
  return spec;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string::npos ? text.size() : comma;
    std::string token = text.substr(pos, end - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in list '" + text + "'");
    token = token.substr(first, last - first + 1);
    double value = 0.0;
    const auto* b = token.data();
    const auto* e = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e || !std::isfinite(value)) {
      throw std::invalid_argument("not a number: '" + token + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

GridSpec parse_grid(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 3 || v[2] < 2 || v[2] != std::floor(v[2])) {
    throw std::invalid_argument("grid must be lo,hi,count with integer count >= 2");
  }
  return {v[0], v[1], static_cast<std::size_t>(v[2])};
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("window must look like kind:params, got '" + text + "'");
  }
  const auto kind = text.substr(0, colon);
  const auto v = parse_number_list(text.substr(colon + 1));
  if (kind == "bump" || kind == "bump1d") {
    if (v.size() < 2 || v.size() > 3) throw std::invalid_argument("bump:center,radius[,amplitude]");
    return Window::bump1d({v[0], v[1], v.size() == 3 ? v[2] : 1.0});
  }
  if (kind == "separable" || kind == "separable2d") {
    if (v.size() < 4 || v.size() > 5) {
      throw std::invalid_argument("separable:cx,rx,cy,ry[,amplitude]");
    }
    return Window::separable({v[0], v[1], v.size() == 5 ? v[4] : 1.0}, {v[2], v[3], 1.0});
  }
  if (kind == "box" || kind == "box2d") {
    if (v.size() < 4 || v.size() > 5) throw std::invalid_argument("box:x0,x1,y0,y1[,amplitude]");
    return Window::box({v[0], v[1], v[2], v[3]}, v.size() == 5 ? v[4] : 1.0);
  }
  throw std::invalid_argument("unknown window kind '" + kind + "'");
}

}  // namespace qfourier
