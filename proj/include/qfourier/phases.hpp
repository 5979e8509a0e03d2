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

#include <array>
#include <span>
#include <string>
#include <vector>

namespace qfourier {

/// Quadratic phase Q(x,y) = a x^2 + b xy + c y^2 + d x + e y with b != 0.
class QuadraticPhase {
 public:
  QuadraticPhase(double a, double b, double c, double d, double e);

  /// Builds from a five-element list (a, b, c, d, e).
  static QuadraticPhase from_coefficients(std::span<const double> coeffs);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double e() const { return e_; }
  std::array<double, 5> coefficients() const { return {a_, b_, c_, d_, e_}; }

  double operator()(double x, double y) const;

  // Pieces of the chirp factorization: Q = x_part(x) + b xy + y_part(y).
  double x_part(double x) const { return (a_ * x + d_) * x; }
  double y_part(double y) const { return (c_ * y + e_) * y; }

  double d_dy(double x, double y) const { return b_ * x + 2.0 * c_ * y + e_; }
  double d_dx(double x, double y) const { return 2.0 * a_ * x + b_ * y + d_; }

  /// Same coefficients with b replaced by -b.
  QuadraticPhase with_b(double b) const { return {a_, b, c_, d_, e_}; }

  std::string describe() const;

 private:
  double a_, b_, c_, d_, e_;
};

/// Homogeneous polynomial S(x,y) = sum_{k=1}^{n-1} alpha_{k-1} x^{n-k} y^k.
/// There is never a pure x^n or y^n term.
class HomogeneousPhase {
 public:
  HomogeneousPhase(int degree, std::vector<double> coeffs);

  int degree() const { return degree_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double operator()(double x, double y) const;
  double d_dy(double x, double y) const;
  double d_dx(double x, double y) const;

  std::string describe() const;

 private:
  int degree_;
  std::vector<double> coeffs_;
};

double eval_quadratic(const QuadraticPhase& q, double x, double y);
double eval_homogeneous(const HomogeneousPhase& s, double x, double y);

}  // namespace qfourier
