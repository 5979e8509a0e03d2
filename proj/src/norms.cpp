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

#include "qfourier/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qfourier {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_hausdorff_young_range(const Exponent& p) {
  if (p.value() < 1.0 || p.value() > 2.0) {
    throw std::invalid_argument("exponent must lie in [1, 2], got " + to_string(p));
  }
}

double vector_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

Exponent::Exponent(double p) : p_(p) {
  if (std::isnan(p) || p < 1.0) {
    throw std::invalid_argument("exponent must satisfy p >= 1");
  }
  if (p == 1.0) {
    conjugate_ = kInf;
  } else if (std::isinf(p)) {
    conjugate_ = 1.0;
  } else {
    conjugate_ = 1.0 / (1.0 - 1.0 / p);
  }
}

Exponent Exponent::infinity() { return Exponent(kInf); }

bool Exponent::is_infinite() const { return std::isinf(p_); }

double Exponent::reciprocal() const { return is_infinite() ? 0.0 : 1.0 / p_; }

Exponent conjugate_exponent(const Exponent& p) { return {p.conjugate_, p.p_}; }

std::string to_string(const Exponent& p) {
  if (p.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << p.value();
  return os.str();
}

double lp_norm(std::span<const cplx> values, std::span<const double> weights, const Exponent& p) {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("lp_norm: values and weights differ in length");
  }
  if (p.is_infinite()) {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  const double pv = p.value();
  double sum = 0.0;
  if (pv == 2.0) {
    for (std::size_t j = 0; j < values.size(); ++j) sum += std::norm(values[j]) * weights[j];
    return std::sqrt(sum);
  }
  if (pv == 1.0) {
    for (std::size_t j = 0; j < values.size(); ++j) sum += std::abs(values[j]) * weights[j];
    return sum;
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double a = std::abs(values[j]);
    if (a != 0.0) sum += std::pow(a, pv) * weights[j];
  }
  return std::pow(sum, 1.0 / pv);
}

double lp_norm(const SampledFunction1D& f, const Exponent& p) {
  const auto w = f.grid().weights();
  return lp_norm(f.values(), w, p);
}

InterpolationParams InterpolationParams::from_exponent(const Exponent& p, double m0, double m1) {
  return {interpolation_alpha(p), m0, m1};
}

double interpolation_alpha(const Exponent& p) {
  require_hausdorff_young_range(p);
  return 2.0 / p.value() - 1.0;
}

double riesz_thorin_constant(const InterpolationParams& params) {
  if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) {
    throw std::invalid_argument("interpolation alpha must lie in [0, 1]");
  }
  if (!(params.m0 >= 0.0) || !(params.m1 >= 0.0)) {
    throw std::invalid_argument("endpoint norms must be non-negative");
  }
  return std::pow(params.m0, params.alpha) * std::pow(params.m1, 1.0 - params.alpha);
}

double bound_T_lambda(double c1, double lambda, const Exponent& p) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return riesz_thorin_constant(InterpolationParams::from_exponent(p, c1, c1 / std::sqrt(lambda)));
}

double bound_T_lambda_statement(double c1, double lambda, const Exponent& p) {
  require_hausdorff_young_range(p);
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const double inv_p = 1.0 / p.value();
  return std::pow(c1, 2.0 * inv_p - 1.0) * std::pow(c1 / lambda, 2.0 * (inv_p - 1.0));
}

double bound_F(double c1, double diameter, const Exponent& p) {
  if (!(diameter > 0.0)) throw std::invalid_argument("support diameter must be positive");
  return riesz_thorin_constant(InterpolationParams::from_exponent(p, c1, c1 * diameter));
}

double bound_F_statement(double c1, double diameter, const Exponent& p) {
  require_hausdorff_young_range(p);
  if (!(diameter > 0.0)) throw std::invalid_argument("support diameter must be positive");
  return c1 * std::pow(diameter, 2.0 * (1.0 / p.value() - 1.0));
}

double bound_HQ(double b, const Exponent& p) {
  if (b == 0.0 || !std::isfinite(b)) throw std::invalid_argument("HQ bound needs b != 0");
  const double alpha = interpolation_alpha(p);
  return std::pow(std::abs(b) / (2.0 * std::numbers::pi), 0.5 * alpha);
}

double bound_oscillatory(double c1, double support_length, const Exponent& p) {
  if (!(support_length > 0.0)) throw std::invalid_argument("support length must be positive");
  const double inv_p1 = conjugate_exponent(p).reciprocal();
  return c1 * std::pow(support_length, inv_p1);
}

double beckner_constant(const Exponent& p, int dimension) {
  require_hausdorff_young_range(p);
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  const Exponent p1 = conjugate_exponent(p);
  // p1^(1/p1) -> 1 as p1 -> inf.
  const double num = std::pow(p.value(), p.reciprocal());
  const double den = p1.is_infinite() ? 1.0 : std::pow(p1.value(), p1.reciprocal());
  return std::pow(num / den, 0.5 * dimension);
}

PowerIterationResult largest_singular_value(const ComplexMatrix& a,
                                            const PowerIterationOptions& options) {
  PowerIterationResult result;
  if (a.rows() == 0 || a.cols() == 0) {
    result.converged = true;
    return result;
  }

  // Deterministic start vector with every component nonzero.
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.5, 1.5);
  std::vector<cplx> v(a.cols());
  for (auto& x : v) x = cplx(unit(rng), unit(rng) - 1.0);
  double nv = vector_norm(v);
  for (auto& x : v) x /= nv;

  double previous = 0.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const auto av = a.apply(v);
    auto w = a.apply_adjoint(av);
    // Rayleigh quotient of A^H A at unit v is ||A v||^2.
    const double sigma_sq = std::pow(vector_norm(av), 2);
    result.iterations = it;
    result.value = std::sqrt(sigma_sq);

    if (sigma_sq == 0.0) {
      // v lies in the null space; A is zero only if this persists from a generic start.
      result.converged = true;
      result.residual = 0.0;
      result.right_vector = v;
      return result;
    }

    double r = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) r += std::norm(w[j] - sigma_sq * v[j]);
    result.residual = std::sqrt(r) / sigma_sq;

    const double nw = vector_norm(w);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = w[j] / nw;

    if (it > 1 && std::abs(result.value - previous) <= options.relative_tolerance * result.value) {
      result.converged = true;
      break;
    }
    previous = result.value;
  }
  result.right_vector = std::move(v);
  return result;
}

ComplexMatrix symmetrized(KernelMatrix k) {
  ComplexMatrix& e = k.entries;
  std::vector<double> col_scale(e.cols());
  for (std::size_t j = 0; j < e.cols(); ++j) {
    // entries carry w_j; sqrt(w_j) remains after dividing it back out.
    col_scale[j] = 1.0 / std::sqrt(k.sources.weight(j));
  }
  for (std::size_t i = 0; i < e.rows(); ++i) {
    const double row_scale = std::sqrt(k.targets.weight(i));
    auto row = e.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= row_scale * col_scale[j];
  }
  return std::move(e);
}

PowerIterationResult operator_norm_2(KernelMatrix k, const PowerIterationOptions& options) {
  return largest_singular_value(symmetrized(std::move(k)), options);
}

}  // namespace qfourier
