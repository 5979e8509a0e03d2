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

#include <optional>
#include <string>
#include <variant>

#include "qfourier/matrix.hpp"
#include "qfourier/phases.hpp"
#include "qfourier/sampling.hpp"

namespace qfourier {

enum class Family { fourier, t_lambda, f1, f2, hq, oscillatory };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

using Phase = std::variant<std::monostate, QuadraticPhase, HomogeneousPhase>;

/// Which integral operator to apply, with its parameters.
///
/// t_lambda: int exp(i lambda Q(x,y)) psi(x,y) f(y) dy
/// f1:       int exp(-i x (a y^2 + b y + c)) psi(x,y) f(y) dy
/// f2:       int exp(-i (a x^2 + b x + c) y) psi(x,y) f(y) dy
/// hq:       sqrt(|b|/2pi) int [exp(-iQ(x,y)) + z exp(-iQ(-x,y))]/2 f(y) dy,  z = i*z_sign
/// oscillatory: int exp(i lambda S(x,y)) chi(y) phi(y) dy
/// fourier:  (1/sqrt(2pi)) int exp(ixy) f(y) dy
struct TransformSpec {
  Family family = Family::fourier;
  Phase phase;
  std::optional<Window> window;
  double lambda = 1.0;
  int z_sign = 1;

  static TransformSpec fourier();
  static TransformSpec t_lambda(QuadraticPhase q, Window w, double lambda);
  static TransformSpec f1(QuadraticPhase q, Window w);
  static TransformSpec f2(QuadraticPhase q, Window w);
  static TransformSpec hq(QuadraticPhase q, int z_sign = 1);
  static TransformSpec oscillatory(HomogeneousPhase s, Window chi, double lambda);

  /// Throws std::invalid_argument when the family's invariants do not hold.
  void validate() const;

  const QuadraticPhase& quadratic() const;
  const HomogeneousPhase& homogeneous() const;

  std::string id() const;
};

enum class Path { quadrature, fast, automatic };

struct TransformResult {
  SampledFunction1D output;
  /// Path actually taken.
  Path path = Path::quadrature;
  /// A fast path was requested but the spec does not admit one.
  bool fell_back = false;
  bool used_fft = false;
  /// Source spacing is coarser than the oscillation guard allows.
  bool under_resolved = false;
  std::string note;
};

/// Oscillation-resolution guard: h <= pi / (4 * max |d phase / dy|) over the
/// box spanned by the targets and the (windowed) source support.
struct ResolutionCheck {
  double max_rate = 0.0;
  double allowed_spacing = 0.0;
  double spacing = 0.0;
  bool ok = true;
};

ResolutionCheck check_resolution(const TransformSpec& spec, const GridSpec& sources,
                                 const GridSpec& targets);

/// Same guard along x, for the target sampling of kernel matrices.
ResolutionCheck check_target_resolution(const TransformSpec& spec, const GridSpec& sources,
                                        const GridSpec& targets);

/// The family's kernel K(x, y), window and prefactor included.
cplx kernel(const TransformSpec& spec, double x, double y);

TransformResult fourier_unitary(const SampledFunction1D& f, const GridSpec& targets,
                                Path path = Path::automatic);
TransformResult apply_T_lambda(const SampledFunction1D& f, const TransformSpec& spec,
                               const GridSpec& targets, Path path = Path::automatic);
TransformResult apply_F1(const SampledFunction1D& f, const TransformSpec& spec,
                         const GridSpec& targets, Path path = Path::automatic);
TransformResult apply_F2(const SampledFunction1D& f, const TransformSpec& spec,
                         const GridSpec& targets, Path path = Path::automatic);
TransformResult apply_HQ(const SampledFunction1D& f, const TransformSpec& spec,
                         const GridSpec& targets, Path path = Path::automatic);
TransformResult apply_oscillatory(const SampledFunction1D& phi, const TransformSpec& spec,
                                  const GridSpec& targets, Path path = Path::automatic);

/// Dispatches on spec.family.
TransformResult apply(const SampledFunction1D& f, const TransformSpec& spec,
                      const GridSpec& targets, Path path = Path::automatic);

/// Discretized operator: entry (i, j) = K(x_i, y_j) * w_j.
struct KernelMatrix {
  GridSpec targets;
  GridSpec sources;
  ComplexMatrix entries;
  ResolutionCheck resolution;
};

inline constexpr std::size_t kMaxKernelEntries = 100'000'000;

/// Throws std::length_error above kMaxKernelEntries entries.
KernelMatrix build_kernel_matrix(const TransformSpec& spec, const GridSpec& sources,
                                 const GridSpec& targets);

}  // namespace qfourier
