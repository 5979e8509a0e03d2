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

#include "qfourier/phases.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qfourier {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("non-finite phase coefficient ") + what);
  }
}

}  // namespace

QuadraticPhase::QuadraticPhase(double a, double b, double c, double d, double e)
    : a_(a), b_(b), c_(c), d_(d), e_(e) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "c");
  require_finite(d, "d");
  require_finite(e, "e");
  if (b == 0.0) {
    throw std::invalid_argument("quadratic phase requires b != 0");
  }
}

QuadraticPhase QuadraticPhase::from_coefficients(std::span<const double> coeffs) {
  if (coeffs.size() != 5) {
    throw std::invalid_argument("quadratic phase needs exactly 5 coefficients (a,b,c,d,e)");
  }
  return {coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
}

double QuadraticPhase::operator()(double x, double y) const {
  // (a x + b y + d) x + (c y + e) y
  return (a_ * x + b_ * y + d_) * x + (c_ * y + e_) * y;
}

std::string QuadraticPhase::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "Q(a=" << a_ << ",b=" << b_ << ",c=" << c_ << ",d=" << d_ << ",e=" << e_ << ")";
  return os.str();
}

HomogeneousPhase::HomogeneousPhase(int degree, std::vector<double> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 2) {
    throw std::invalid_argument("homogeneous phase degree must be >= 2");
  }
  if (coeffs_.size() != static_cast<std::size_t>(degree_ - 1)) {
    throw std::invalid_argument("homogeneous phase of degree n needs n-1 coefficients");
  }
  bool any_nonzero = false;
  for (double c : coeffs_) {
    require_finite(c, "alpha");
    any_nonzero = any_nonzero || c != 0.0;
  }
  if (!any_nonzero) {
    throw std::invalid_argument("homogeneous phase needs at least one nonzero coefficient");
  }
}

double HomogeneousPhase::operator()(double x, double y) const {
  // Horner in y over descending k; the x power climbs as k falls.
  double acc = 0.0;
  double x_pow = x;
  for (int k = degree_ - 1; k >= 1; --k) {
    acc = acc * y + coeffs_[k - 1] * x_pow;
    x_pow *= x;
  }
  return acc * y;
}

double HomogeneousPhase::d_dy(double x, double y) const {
  // sum_k k alpha_{k-1} x^{n-k} y^{k-1}
  double acc = 0.0;
  double x_pow = x;
  for (int k = degree_ - 1; k >= 1; --k) {
    acc = acc * y + k * coeffs_[k - 1] * x_pow;
    x_pow *= x;
  }
  return acc;
}

double HomogeneousPhase::d_dx(double x, double y) const {
  // sum_k (n-k) alpha_{k-1} x^{n-k-1} y^k
  double acc = 0.0;
  double x_pow = 1.0;
  for (int k = degree_ - 1; k >= 1; --k) {
    acc = acc * y + (degree_ - k) * coeffs_[k - 1] * x_pow;
    x_pow *= x;
  }
  return acc * y;
}

std::string HomogeneousPhase::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "S(n=" << degree_ << ",alpha=[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    os << (i ? "," : "") << coeffs_[i];
  }
  os << "])";
  return os.str();
}

double eval_quadratic(const QuadraticPhase& q, double x, double y) { return q(x, y); }

double eval_homogeneous(const HomogeneousPhase& s, double x, double y) { return s(x, y); }

}  // namespace qfourier
