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

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qfourier/norms.hpp"

using namespace qfourier;

namespace {

double svd_oracle(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  return Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = n(rng);
      const double im = n(rng);
      a(i, j) = {re, im};
    }
  }
  return a;
}

}  // namespace

TEST_SUITE("norms") {
  TEST_CASE("conjugate exponent examples") {
    CHECK(conjugate_exponent(Exponent(2.0)).value() == 2.0);
    CHECK(conjugate_exponent(Exponent(1.0)).is_infinite());
    CHECK(conjugate_exponent(Exponent::infinity()).value() == 1.0);
    CHECK(conjugate_exponent(Exponent(4.0 / 3.0)).value() == 4.0);
    CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
    CHECK_THROWS_AS(Exponent(std::nan("")), std::invalid_argument);
  }

  TEST_CASE("conjugate exponent is an involution") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
      const Exponent p(u(rng));
      CHECK(conjugate_exponent(conjugate_exponent(p)) == p);
      if (!conjugate_exponent(p).is_infinite()) {
        CHECK(p.reciprocal() + conjugate_exponent(p).reciprocal() == doctest::Approx(1.0).epsilon(1e-14));
      }
    }
    for (double p : {1.0, 2.0, 4.0 / 3.0, std::numeric_limits<double>::infinity()}) {
      CHECK(conjugate_exponent(conjugate_exponent(Exponent(p))) == Exponent(p));
    }
  }

  TEST_CASE("lp norm examples") {
    const GridSpec unit(0, 1, 101);
    const SampledFunction1D one(unit, std::vector<cplx>(101, 1.0));
    CHECK(lp_norm(one, Exponent(2.0)) == doctest::Approx(1.0).epsilon(1e-15));

    const GridSpec g = default_grid();
    const auto gauss = make_gaussian(g, 1.0 / std::sqrt(2.0 * std::numbers::pi), 0.0);
    CHECK(std::abs(lp_norm(gauss, Exponent(2.0)) - oracle::gaussian_pi_l2()) <= 1e-6);

    std::vector<cplx> v(11, cplx(1.0, 1.0));
    v[4] = cplx(0.0, -3.5);
    CHECK(lp_norm(SampledFunction1D(GridSpec(0, 1, 11), v), Exponent::infinity()) == 3.5);
  }

  TEST_CASE("lp norm is stable under grid refinement") {
    const GridSpec g = default_grid();
    const GridSpec fine(g.lo(), g.hi(), 2 * g.count() - 1);
    for (double sigma : {0.5, 1.0, 2.0}) {
      for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0}) {
        const double coarse = lp_norm(make_gaussian(g, sigma, 0.3), Exponent(p));
        const double refined = lp_norm(make_gaussian(fine, sigma, 0.3), Exponent(p));
        CHECK(std::abs(coarse - refined) <= 1e-6);
      }
    }
  }

  TEST_CASE("Holder inequality on random pairs") {
    const GridSpec g(-3, 3, 257);
    std::mt19937_64 rng(99);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> pu(1.0, 6.0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<cplx> f(g.count()), h(g.count()), fh(g.count());
      for (std::size_t j = 0; j < g.count(); ++j) {
        const double a = n(rng), b = n(rng), c = n(rng), d = n(rng);
        f[j] = {a, b};
        h[j] = {c, d};
        fh[j] = f[j] * h[j];
      }
      const Exponent p(pu(rng));
      const double lhs = lp_norm(SampledFunction1D(g, fh), Exponent(1.0));
      const double rhs = lp_norm(SampledFunction1D(g, f), p) *
                         lp_norm(SampledFunction1D(g, h), conjugate_exponent(p));
      CHECK(lhs <= rhs * (1 + 1e-12));
    }
  }

  TEST_CASE("Riesz-Thorin constant") {
    CHECK(riesz_thorin_constant(InterpolationParams::from_exponent(Exponent(1.0), 3, 5)) == 3.0);
    CHECK(riesz_thorin_constant(InterpolationParams::from_exponent(Exponent(2.0), 3, 5)) == 5.0);
    CHECK(riesz_thorin_constant(InterpolationParams::from_exponent(Exponent(4.0 / 3.0), 4, 1)) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(interpolation_alpha(Exponent(3.0)), std::invalid_argument);
  }

  TEST_CASE("Riesz-Thorin constant is log-linear in alpha") {
    const double m0 = 2.7, m1 = 0.35;
    std::vector<double> logs;
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      logs.push_back(std::log(riesz_thorin_constant({alpha, m0, m1})));
    }
    const double step = logs[1] - logs[0];
    for (std::size_t k = 1; k < logs.size(); ++k) {
      CHECK(logs[k] - logs[k - 1] == doctest::Approx(step).epsilon(1e-12));
    }
  }

  TEST_CASE("bound examples") {
    CHECK(bound_T_lambda(1.7, 9.0, Exponent(1.0)) == doctest::Approx(1.7));
    CHECK(bound_T_lambda(1.7, 9.0, Exponent(2.0)) == doctest::Approx(1.7 / 3.0));
    CHECK(bound_T_lambda(2.0, 4.0, Exponent(4.0 / 3.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(bound_F(1.3, 5.0, Exponent(1.0)) == doctest::Approx(1.3));
    CHECK(bound_F(1.3, 5.0, Exponent(2.0)) == doctest::Approx(6.5));
    CHECK(bound_F(1.0, 4.0, Exponent(4.0 / 3.0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bound_HQ(3.0, Exponent(2.0)) == 1.0);
    CHECK(bound_HQ(2 * std::numbers::pi, Exponent(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bound_HQ(1.0, Exponent(1.0)) ==
          doctest::Approx(static_cast<double>(1 / sqrt(2 * oracle::pi()))).epsilon(1e-15));
    for (double p : {2.01, 4.0}) {
      CHECK_THROWS_AS(bound_T_lambda(1, 1, Exponent(p)), std::invalid_argument);
      CHECK_THROWS_AS(bound_F(1, 1, Exponent(p)), std::invalid_argument);
      CHECK_THROWS_AS(bound_HQ(1, Exponent(p)), std::invalid_argument);
      CHECK_THROWS_AS(beckner_constant(Exponent(p), 1), std::invalid_argument);
    }
  }

  TEST_CASE("statement forms of the bounds") {
    CHECK(bound_T_lambda_statement(2.0, 4.0, Exponent(1.0)) == doctest::Approx(2.0));
    CHECK(bound_T_lambda_statement(2.0, 4.0, Exponent(2.0)) == doctest::Approx(2.0));
    CHECK(bound_F_statement(1.0, 4.0, Exponent(2.0)) == doctest::Approx(0.25));
  }

  TEST_CASE("T_lambda L2 bound times sqrt lambda is constant") {
    for (double lambda : {0.5, 1.0, 16.0, 1e4}) {
      CHECK(bound_T_lambda(1.25, lambda, Exponent(2.0)) * std::sqrt(lambda) ==
            doctest::Approx(1.25).epsilon(1e-14));
    }
  }

  TEST_CASE("Beckner constant") {
    CHECK(beckner_constant(Exponent(2.0), 3) == 1.0);
    CHECK(beckner_constant(Exponent(1.0), 2) == 1.0);
    CHECK(std::abs(beckner_constant(Exponent(4.0 / 3.0), 1) - oracle::sharp_hy_constant(4, 3, 1)) <=
          1e-14);
    CHECK(std::abs(beckner_constant(Exponent(1.5), 3) - oracle::sharp_hy_constant(3, 2, 3)) <= 1e-14);
  }

  TEST_CASE("power iteration on simple matrices") {
    CHECK(largest_singular_value(ComplexMatrix::identity(8)).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    ComplexMatrix d(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    const auto r = largest_singular_value(d);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(largest_singular_value(ComplexMatrix(4, 4)).value == 0.0);
  }

  TEST_CASE("power iteration matches dense SVD") {
    std::mt19937_64 rng(2026);
    for (std::size_t n : {64u, 128u, 256u}) {
      const auto a = random_matrix(n, n, rng);
      const auto r = largest_singular_value(a);
      const double ref = svd_oracle(a);
      CAPTURE(n);
      CHECK(std::abs(r.value - ref) <= 1e-6 * ref);
    }
    const auto tall = random_matrix(200, 40, rng);
    CHECK(std::abs(largest_singular_value(tall).value - svd_oracle(tall)) <= 1e-6 * svd_oracle(tall));
  }

  TEST_CASE("non-convergence is reported with the last iterate") {
    std::mt19937_64 rng(5);
    const auto a = random_matrix(64, 64, rng);
    const auto r = largest_singular_value(a, {1e-300, 3, 1});
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
    CHECK(r.value > 0.0);
    CHECK(r.right_vector.size() == 64);
    CHECK(r.residual > 0.0);
  }

  TEST_CASE("symmetrized scaling") {
    const GridSpec g(0, 1, 3);
    auto k = build_kernel_matrix(TransformSpec::fourier(), g, g);
    const auto s = symmetrized(k);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const cplx expect = std::sqrt(g.weight(i) * g.weight(j)) * kernel(TransformSpec::fourier(), g.node(i), g.node(j));
        CHECK(std::abs(s(i, j) - expect) <= 1e-16);
      }
    }
  }

  TEST_CASE("fourier operator norm on a wide grid is close to one") {
    const GridSpec g(-12, 12, 768);
    const auto r = operator_norm_2(build_kernel_matrix(TransformSpec::fourier(), g, g));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-3));
  }

  TEST_CASE("HQ operator norm is 1/sqrt 2") {
    const GridSpec g(-10, 10, 1024);
    const auto r =
        operator_norm_2(build_kernel_matrix(TransformSpec::hq(QuadraticPhase(1, 1, 1, 1, 1)), g, g));
    CHECK(r.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-3));
  }
}
