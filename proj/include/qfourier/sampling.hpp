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

#include <complex>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qfourier/phases.hpp"

namespace qfourier {

using cplx = std::complex<double>;

/// Uniform grid lo + j h, j = 0..count-1, h = (hi - lo) / (count - 1).
class GridSpec {
 public:
  GridSpec(double lo, double hi, std::size_t count);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t count() const { return count_; }
  double spacing() const { return h_; }

  double node(std::size_t j) const;
  std::vector<double> nodes() const;

  /// Trapezoid weight of node j (h/2 at the two ends, h inside).
  double weight(std::size_t j) const;
  std::vector<double> weights() const;

  bool operator==(const GridSpec& other) const = default;

 private:
  double lo_, hi_;
  std::size_t count_;
  double h_;
};

/// Default verification grid [-16, 16] with 4096 nodes.
GridSpec default_grid();

/// Complex samples on a grid; the discrete stand-in for a function on the line.
class SampledFunction1D {
 public:
  SampledFunction1D(GridSpec grid, std::vector<cplx> values);
  static SampledFunction1D zeros(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const cplx& operator[](std::size_t j) const { return values_[j]; }

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
};

/// Mollifier amplitude * exp(1 - 1/(1-u^2)), u = (t - center)/radius, zero for |u| >= 1.
struct BumpProfile {
  double center = 0.0;
  double radius = 1.0;
  double amplitude = 1.0;

  double operator()(double t) const;
  double lo() const { return center - radius; }
  double hi() const { return center + radius; }
};

struct Box {
  double x0, x1, y0, y1;

  bool contains_x(double x) const { return x >= x0 && x <= x1; }
  bool contains_y(double y) const { return y >= y0 && y <= y1; }
  double diameter() const;
};

enum class WindowKind { bump1d, separable2d, box2d, general2d };

const char* to_string(WindowKind kind);

/// Compactly supported weight psi(x,y) or cutoff chi(y).
///
/// bump1d depends on y only; its x-extent is ignored and psi(x,y) = chi(y).
/// separable2d is bump(x) * bump(y); box2d is a constant on a closed box.
/// general2d wraps an arbitrary callable and is only usable on quadrature paths.
class Window {
 public:
  static Window bump1d(BumpProfile profile);
  static Window separable(BumpProfile x_profile, BumpProfile y_profile);
  static Window box(Box support, double amplitude = 1.0);
  static Window general(std::function<double(double, double)> fn, Box support, double sup_bound);

  WindowKind kind() const { return kind_; }
  bool separable() const { return kind_ != WindowKind::general2d; }
  bool one_dimensional() const { return kind_ == WindowKind::bump1d; }

  double operator()(double x, double y) const;
  /// Separable factors, psi(x,y) = x_factor(x) * y_factor(y).
  double x_factor(double x) const;
  double y_factor(double y) const;

  /// Support box M. For bump1d the x-extent mirrors the y-extent.
  const Box& support() const { return support_; }
  /// C1 = sup |psi|.
  double sup_bound() const { return sup_bound_; }
  /// R = Euclidean diameter of M (for bump1d, the length of the y-interval).
  double diameter() const;

  const BumpProfile& x_profile() const { return x_profile_; }
  const BumpProfile& y_profile() const { return y_profile_; }
  double amplitude() const { return amplitude_; }

 private:
  Window() = default;

  WindowKind kind_ = WindowKind::bump1d;
  Box support_{0, 0, 0, 0};
  BumpProfile x_profile_, y_profile_;
  double amplitude_ = 1.0;
  double sup_bound_ = 1.0;
  std::function<double(double, double)> general_;
};

/// Evaluates a bump1d window at t.
double bump_eval(const Window& w, double t);

// Analytic descriptions of corpus members, kept alongside the samples so that
// one-sided limits at jumps are known exactly.
struct GaussianModel {
  double sigma = 1.0;
  double center = 0.0;
};
struct BumpModel {
  BumpProfile profile;
};
struct StepModel {
  double a = -1.0;
  double b = 1.0;
};
struct ModulatedGaussianModel {
  double sigma = 1.0;
  double center = 0.0;
  double omega = 0.0;
};
using FunctionModel = std::variant<GaussianModel, BumpModel, StepModel, ModulatedGaussianModel>;

struct OneSidedLimits {
  cplx left;
  cplx right;
};

cplx evaluate(const FunctionModel& model, double x);
OneSidedLimits one_sided_limits(const FunctionModel& model, double x);
SampledFunction1D sample(const FunctionModel& model, const GridSpec& grid);
std::string kind_name(const FunctionModel& model);

SampledFunction1D make_gaussian(const GridSpec& grid, double sigma, double center);
SampledFunction1D make_step(const GridSpec& grid, double a, double b);
SampledFunction1D make_bump(const GridSpec& grid, const BumpProfile& profile);
SampledFunction1D make_modulated_gaussian(const GridSpec& grid, double sigma, double center,
                                          double omega);

/// Multiplies f pointwise by exp(i * sign * lambda * (c y^2 + e y)).
SampledFunction1D chirp_premodulate(const SampledFunction1D& f, const QuadraticPhase& q,
                                    double lambda, int sign);

struct CorpusEntry {
  std::string id;
  FunctionModel model;
  SampledFunction1D function;
  std::string description;
};

using Corpus = std::vector<CorpusEntry>;

CorpusEntry make_entry(std::string id, FunctionModel model, const GridSpec& grid,
                       std::string description = {});

/// Five smooth members: Gaussians sigma = 0.5, 1, 2; unit bump; modulated Gaussian.
Corpus default_corpus(const GridSpec& grid);

/// Parses a JSON array of {id, kind, params[, description]}.
Corpus parse_corpus(const std::string& json_text, const GridSpec& grid);
Corpus load_corpus(const std::filesystem::path& path, const GridSpec& grid);

}  // namespace qfourier
