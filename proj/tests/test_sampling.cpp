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

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "qfourier/norms.hpp"
#include "qfourier/sampling.hpp"

using namespace qfourier;

TEST_SUITE("sampling") {
  TEST_CASE("grid nodes and trapezoid weights") {
    const GridSpec g(-1.0, 1.0, 5);
    CHECK(g.spacing() == 0.5);
    CHECK(g.node(0) == -1.0);
    CHECK(g.node(4) == 1.0);
    CHECK(g.weight(0) == 0.25);
    CHECK(g.weight(2) == 0.5);
    double total = 0.0;
    for (double w : g.weights()) total += w;
    CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(GridSpec(1.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(0.0, 1.0, 1), std::invalid_argument);
  }

  TEST_CASE("nodes are a single multiply-add of the index") {
    const GridSpec g = default_grid();
    const auto nodes = g.nodes();
    for (std::size_t j = 0; j < g.count(); j += 97) {
      CHECK(nodes[j] == std::fma(static_cast<double>(j), g.spacing(), g.lo()));
      CHECK(nodes[j] == g.node(j));
    }
    CHECK(g.count() == 4096);
    CHECK(g.lo() == -16.0);
    CHECK(g.hi() == 16.0);
  }

  TEST_CASE("sampled functions validate their values") {
    const GridSpec g(0.0, 1.0, 3);
    CHECK_THROWS_AS(SampledFunction1D(g, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(SampledFunction1D(g, {1.0, NAN, 0.0}), std::invalid_argument);
    CHECK(SampledFunction1D::zeros(g)[1] == cplx(0.0));
  }

  TEST_CASE("bump evaluation") {
    const Window w = Window::bump1d({0.0, 1.0, 1.0});
    CHECK(bump_eval(w, 0.0) == 1.0);
    CHECK(bump_eval(w, 1.5) == 0.0);
    const double ref = oracle::bump(0.5);
    CHECK(ref == doctest::Approx(0.7165).epsilon(1e-4));
    CHECK(std::abs(bump_eval(w, 0.5) - ref) <= 1e-15);
    CHECK_THROWS(bump_eval(Window::separable({0, 1, 1}, {0, 1, 1}), 0.0));
  }

  TEST_CASE("bump profile matches the closed form on a sweep") {
    const BumpProfile p{0.3, 0.8, 2.5};
    for (int k = -120; k <= 120; ++k) {
      const double t = 0.3 + 0.01 * k;
      const double ref = 2.5 * oracle::bump((t - 0.3) / 0.8);
      CHECK(std::abs(p(t) - ref) <= 4e-16 * 2.5);
    }
  }

  TEST_CASE("windows vanish outside their support") {
    const Window bump = Window::bump1d({0.5, 2.0, 1.0});
    const Window sep = Window::separable({-1.0, 0.5, 2.0}, {1.0, 1.5, 1.0});
    const Window box = Window::box({-1, 2, -3, 0}, 0.7);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> off(1e-9, 5.0);
    for (int k = 0; k < 100; ++k) {
      const double d = off(rng);
      CHECK(bump_eval(bump, 2.5 + d) == 0.0);
      CHECK(bump_eval(bump, -1.5 - d) == 0.0);
      CHECK(sep(-0.5 + d, 1.0) == 0.0);
      CHECK(sep(-1.0, -0.5 - d) == 0.0);
      CHECK(box(2.0 + d, -1.0) == 0.0);
      CHECK(box(0.0, 0.0 + d) == 0.0);
    }
  }

  TEST_CASE("declared sup bound matches an oversampled maximum") {
    const Window sep = Window::separable({0.2, 1.3, 1.7}, {-0.4, 0.6, 1.0});
    const Window bump = Window::bump1d({0.0, 1.0, 3.0});
    double m_sep = 0.0, m_bump = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = -1.1 + 2.6 * i / 400.0;
      m_bump = std::max(m_bump, std::abs(bump_eval(bump, -1.0 + 2.0 * i / 400.0)));
      for (int j = 0; j <= 400; ++j) {
        const double y = -1.0 + 1.2 * j / 400.0;
        m_sep = std::max(m_sep, std::abs(sep(x, y)));
      }
    }
    CHECK(m_sep <= sep.sup_bound());
    CHECK(m_sep >= 0.999 * sep.sup_bound());
    CHECK(m_bump <= bump.sup_bound());
    CHECK(m_bump >= 0.999 * bump.sup_bound());
    CHECK(sep.sup_bound() == doctest::Approx(1.7));
  }

  TEST_CASE("window diameter is the support box diagonal") {
    const Window sep = Window::separable({0.0, 1.0, 1.0}, {0.0, 2.0, 1.0});
    CHECK(sep.diameter() == doctest::Approx(std::sqrt(4.0 + 16.0)));
    const Window bump = Window::bump1d({0.0, 1.5, 1.0});
    CHECK(bump.diameter() == doctest::Approx(3.0));
  }

  TEST_CASE("gaussian samples") {
    const GridSpec g(-2.0, 2.0, 5);
    const auto f = make_gaussian(g, 1.0, 0.0);
    CHECK(f[2] == cplx(1.0));
    CHECK(std::abs(f[3] - oracle::exp_of(-0.5)) <= 1e-16);
    CHECK(oracle::exp_of(-0.5) == doctest::Approx(0.60653).epsilon(1e-5));
    const auto beckner = make_gaussian(g, 1.0 / std::sqrt(2.0 * std::numbers::pi), 0.0);
    CHECK(std::abs(beckner[3] - oracle::exp_minus_pi()) <= 1e-16);
    CHECK(oracle::exp_minus_pi() == doctest::Approx(0.043214).epsilon(1e-5));
  }

  TEST_CASE("step samples use the closed-interval convention") {
    const GridSpec g(-2.0, 2.0, 5);
    const auto s = make_step(g, -1.0, 1.0);
    CHECK(s[2] == cplx(1.0));
    CHECK(s[4] == cplx(0.0));
    CHECK(s[3] == cplx(1.0));
    CHECK(s[1] == cplx(1.0));
    CHECK_THROWS_AS(make_step(g, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_step(g, -3.0, 1.0), std::invalid_argument);
    const auto lim = one_sided_limits(StepModel{-1.0, 1.0}, 1.0);
    CHECK(lim.left == cplx(1.0));
    CHECK(lim.right == cplx(0.0));
  }

  TEST_CASE("chirp premodulation keeps moduli") {
    const GridSpec g(-3.0, 3.0, 7);
    const SampledFunction1D one(g, std::vector<cplx>(7, 1.0));
    const auto same = chirp_premodulate(one, QuadraticPhase(1, 1, 0, 1, 0), 2.0, 1);
    for (std::size_t j = 0; j < 7; ++j) CHECK(same[j] == cplx(1.0));

    const auto flipped = chirp_premodulate(one, QuadraticPhase(0, 1, 1, 0, 0), std::numbers::pi, 1);
    CHECK(std::abs(flipped[4] - cplx(-1.0)) <= 1e-15);

    const auto f = make_modulated_gaussian(default_grid(), 1.3, 0.2, 2.0);
    const auto g2 = chirp_premodulate(f, QuadraticPhase(0.5, 1, -0.7, 2, 1.1), 3.0, -1);
    for (std::size_t j = 0; j < f.size(); j += 13) {
      CHECK(std::abs(std::abs(g2[j]) - std::abs(f[j])) <= 1e-15 * std::abs(f[j]));
    }
    for (double p : {1.0, 1.5, 2.0}) {
      CHECK(lp_norm(g2, Exponent(p)) == doctest::Approx(lp_norm(f, Exponent(p))).epsilon(1e-14));
    }
  }

  TEST_CASE("default corpus has unique ids and five members") {
    const auto corpus = default_corpus(default_grid());
    CHECK(corpus.size() == 5);
    std::set<std::string> ids;
    for (const auto& e : corpus) ids.insert(e.id);
    CHECK(ids.size() == corpus.size());
  }

  TEST_CASE("corpus files") {
    const GridSpec g = default_grid();
    const auto c = parse_corpus(R"([
      {"id": "g", "kind": "gaussian", "params": {"sigma": 0.7}},
      {"id": "s", "kind": "step", "params": {"a": -1, "b": 2}, "description": "box"},
      {"id": "b", "kind": "bump", "params": {"radius": 2}},
      {"id": "m", "kind": "modulated_gaussian", "params": {"sigma": 1, "omega": -2}}
    ])",
                                g);
    REQUIRE(c.size() == 4);
    CHECK(c[1].description == "box");
    CHECK(kind_name(c[3].model) == "modulated_gaussian");
    CHECK_THROWS_AS(parse_corpus(R"([{"id":"a","kind":"gaussian","params":{"sigma":1}},
                                      {"id":"a","kind":"bump","params":{"radius":1}}])",
                                 g),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_corpus(R"([{"id":"a","kind":"sawtooth"}])", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_corpus("{", g), std::invalid_argument);
  }
}
