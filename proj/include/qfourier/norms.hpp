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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfourier/matrix.hpp"
#include "qfourier/sampling.hpp"
#include "qfourier/transforms.hpp"

namespace qfourier {

/// Lebesgue exponent p in [1, inf]. Carries its conjugate so that taking the
/// conjugate twice returns the original value bit for bit.
class Exponent {
 public:
  /// Throws std::invalid_argument for p < 1 or NaN.
  explicit Exponent(double p);
  static Exponent infinity();

  double value() const { return p_; }
  bool is_infinite() const;
  /// 1/p, with 1/inf = 0.
  double reciprocal() const;

  bool operator==(const Exponent& other) const { return p_ == other.p_; }

 private:
  Exponent(double p, double conjugate) : p_(p), conjugate_(conjugate) {}
  friend Exponent conjugate_exponent(const Exponent& p);

  double p_;
  double conjugate_;
};

/// p / (p - 1), with 1 <-> inf.
Exponent conjugate_exponent(const Exponent& p);

/// Formats inf as "inf", otherwise with 17 significant digits.
std::string to_string(const Exponent& p);

/// Trapezoid-weighted grid norm; p = inf is the node-wise maximum modulus.
double lp_norm(const SampledFunction1D& f, const Exponent& p);
double lp_norm(std::span<const cplx> values, std::span<const double> weights, const Exponent& p);

/// Riesz-Thorin data: alpha = 2/p - 1, M0 the L1 -> Linf norm, M1 the L2 -> L2 norm.
struct InterpolationParams {
  double alpha;
  double m0;
  double m1;

  static InterpolationParams from_exponent(const Exponent& p, double m0, double m1);
};

/// M0^alpha * M1^(1 - alpha).
double riesz_thorin_constant(const InterpolationParams& params);

/// alpha = 2/p - 1 for p in [1, 2]; throws otherwise.
double interpolation_alpha(const Exponent& p);

/// C1^alpha (C1 / sqrt(lambda))^(1 - alpha).
double bound_T_lambda(double c1, double lambda, const Exponent& p);
/// Printed form C1^(2/p - 1) (C1/lambda)^(2(1/p - 1)); reported, never used for verdicts.
double bound_T_lambda_statement(double c1, double lambda, const Exponent& p);

/// C1^alpha (C1 R)^(1 - alpha) = C1 R^(2 - 2/p).
double bound_F(double c1, double diameter, const Exponent& p);
/// Printed form C1 R^(2(1/p - 1)).
double bound_F_statement(double c1, double diameter, const Exponent& p);

/// (|b| / 2pi)^(alpha/2).
double bound_HQ(double b, const Exponent& p);

/// C1 |M|^(1/p1) for the oscillatory operator with cutoff support length |M|.
double bound_oscillatory(double c1, double support_length, const Exponent& p);

/// (p^(1/p) / p1^(1/p1))^(n/2), the sharp Hausdorff-Young constant.
double beckner_constant(const Exponent& p, int dimension);

struct PowerIterationOptions {
  double relative_tolerance = 1e-10;
  int max_iterations = 10000;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct PowerIterationResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  /// ||A^H A v - s^2 v|| / s^2 at the last iterate.
  double residual = 0.0;
  std::vector<cplx> right_vector;
};

/// Largest singular value by power iteration on A^H A.
PowerIterationResult largest_singular_value(const ComplexMatrix& a,
                                            const PowerIterationOptions& options = {});

/// Operator-norm estimate of the continuum operator behind a kernel matrix:
/// largest singular value of diag(sqrt(w_i)) K diag(sqrt(w_j)).
/// Takes the matrix by value; pass an rvalue to scale in place.
PowerIterationResult operator_norm_2(KernelMatrix k, const PowerIterationOptions& options = {});

/// diag(sqrt(w_i)) K diag(sqrt(w_j)) with K(x_i, y_j) recovered from entries / w_j.
ComplexMatrix symmetrized(KernelMatrix k);

}  // namespace qfourier
