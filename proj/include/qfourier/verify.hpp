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
#include <optional>
#include <string>
#include <vector>

#include "qfourier/norms.hpp"
#include "qfourier/sampling.hpp"
#include "qfourier/transforms.hpp"

namespace qfourier {

enum class Verdict { pass, fail, untrusted };

const char* to_string(Verdict v);

/// Combines verdicts: untrusted dominates pass, fail dominates both.
Verdict worst(Verdict a, Verdict b);

// ---------------------------------------------------------------------------
// Hausdorff-Young inequalities
// ---------------------------------------------------------------------------

struct InequalityReport {
  std::string transform;
  std::string corpus;
  Exponent p{2.0};
  Exponent p1{2.0};
  std::optional<double> lambda;
  double norm_f = 0.0;
  /// ||T f||_{p1}
  double lhs = 0.0;
  double bound_proof = 0.0;
  double bound_statement = 0.0;
  /// bound_proof * ||f||_p
  double rhs_proof = 0.0;
  /// bound_statement * ||f||_p, reported only.
  double rhs_statement = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::pass;
  std::string note;
};

struct HausdorffYoungOptions {
  /// Output grid; defaults to the source grid (clipped to the window for oscillatory).
  std::optional<GridSpec> targets;
  Path path = Path::automatic;
};

/// One report per (corpus entry, p), corpus-major. Fourier family is rejected.
/// Under-resolved comparisons are untrusted whatever the raw outcome.
std::vector<InequalityReport> check_hausdorff_young(const TransformSpec& spec,
                                                    const Corpus& corpus,
                                                    const std::vector<Exponent>& p_values,
                                                    const HausdorffYoungOptions& options = {});

/// Output grid used by check_hausdorff_young when none is given.
GridSpec hausdorff_young_targets(const TransformSpec& spec, const GridSpec& sources);

// ---------------------------------------------------------------------------
// Unitarity of HQ
// ---------------------------------------------------------------------------

struct UnitarityReport {
  std::string transform;
  std::string corpus;
  double b = 0.0;
  int z_sign = 1;
  double norm_f = 0.0;
  double norm_hf = 0.0;
  double ratio = 0.0;
  /// |ratio - 1|
  double deviation = 0.0;
  double tolerance = 1e-3;
  bool skipped = false;
  Verdict verdict = Verdict::pass;
  std::string note;
};

/// Runs q and q with b negated, corpus-major within each sign.
std::vector<UnitarityReport> check_unitarity_HQ(const QuadraticPhase& q, const Corpus& corpus,
                                                int z_sign = 1, double tolerance = 1e-3);

// ---------------------------------------------------------------------------
// Operator-norm decay
// ---------------------------------------------------------------------------

struct DecayOptions {
  /// Supplies the maximal node spacing; decay grids are never coarser.
  GridSpec base = default_grid();
  /// Oscillatory x-range is [-kappa lambda^(-1/n), kappa lambda^(-1/n)].
  double kappa = 4.0;
  std::size_t min_nodes = 128;
  PowerIterationOptions power;
};

struct DecayReport {
  std::string kind;
  std::string phase;
  std::vector<double> lambdas;
  std::vector<double> norms;
  /// norm * lambda^(1/n)
  std::vector<double> scaled;
  std::vector<std::size_t> target_nodes;
  std::vector<std::size_t> source_nodes;
  std::vector<bool> under_resolved;
  std::vector<bool> converged;
  double slope = 0.0;
  double target_slope = 0.0;
  double max_scaled = 0.0;
  double argmax_lambda = 0.0;
  /// Upper limit for max_scaled when the family has one (T_lambda: 1.05 C1).
  std::optional<double> scaled_limit;
  Verdict verdict = Verdict::pass;
  std::string note;
};

/// Unweighted least-squares slope of log y against log x.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Pass iff max ||T_lambda|| sqrt(lambda) <= 1.05 C1.
DecayReport check_T_lambda_L2_decay(const QuadraticPhase& q, const Window& w,
                                    const std::vector<double>& lambdas,
                                    const DecayOptions& options = {});

/// n = 2: pass iff slope = -0.5 +- 0.05. n >= 3: pass iff the maximum of
/// ||T_lambda|| lambda^(1/n) occurs at lambda <= sqrt(lambda_min lambda_max).
DecayReport estimate_oscillatory_decay(const HomogeneousPhase& s, const Window& chi,
                                       const std::vector<double>& lambdas,
                                       const DecayOptions& options = {});

// ---------------------------------------------------------------------------
// Dirichlet-kernel limit
// ---------------------------------------------------------------------------

struct LimitReport {
  std::string corpus;
  double x = 0.0;
  std::vector<double> lambdas;
  std::vector<double> approximants;
  double target = 0.0;
  std::vector<double> errors;
  /// Round-off level of each approximant; errors below it count as zero.
  std::vector<double> noise_floor;
  double tolerance = 0.03;
  /// Errors non-increasing up to 10% and the noise floor.
  bool decreasing = true;
  Verdict verdict = Verdict::pass;
  std::string note;
};

/// (1/pi) int f(t) sin(lambda (x - t)) / (x - t) dt on the sample grid of f.
double dirichlet_approximant(const SampledFunction1D& f, double x, double lambda,
                             double* noise_floor = nullptr);

/// Pass iff the error at the largest lambda is within tolerance.
LimitReport check_dirichlet_limit(const CorpusEntry& f, double x, const std::vector<double>& lambdas,
                                  double tolerance = 0.03);

// ---------------------------------------------------------------------------
// Minkowski integral inequality
// ---------------------------------------------------------------------------

struct MinkowskiReport {
  std::string table;
  double s = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Verdict verdict = Verdict::pass;
};

/// F(x_i, y_j) row-major with rows x and columns y:
/// lhs = [sum_i wx_i |sum_j wy_j F_ij|^s]^(1/s), rhs = sum_j wy_j [sum_i wx_i |F_ij|^s]^(1/s).
MinkowskiReport check_minkowski(const ComplexMatrix& table, const std::vector<double>& wx,
                                const std::vector<double>& wy, double s);

/// Random tables x exponents, table-major; deterministic in seed.
std::vector<MinkowskiReport> minkowski_suite(std::size_t tables, const std::vector<double>& s_values,
                                             std::uint64_t seed);

// ---------------------------------------------------------------------------
// Beckner sharpness
// ---------------------------------------------------------------------------

struct BecknerReport {
  double p = 4.0 / 3.0;
  double norm_f = 0.0;
  double norm_hat = 0.0;
  double ratio = 0.0;
  double constant = 0.0;
  double relative_error = 0.0;
  double tolerance = 2e-3;
  Verdict verdict = Verdict::pass;
};

/// f = exp(-pi x^2) against the prefactor-free exp(-2 pi i x y) transform.
BecknerReport beckner_check(const Exponent& p, const GridSpec& grid = default_grid(),
                            double tolerance = 2e-3);

// ---------------------------------------------------------------------------
// Fast path versus quadrature, power iteration versus dense SVD
// ---------------------------------------------------------------------------

struct OracleReport {
  std::string name;
  std::string detail;
  double value = 0.0;
  double reference = 0.0;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool used_fft = false;
  Verdict verdict = Verdict::pass;
};

struct OracleOptions {
  std::size_t specs = 20;
  std::size_t nodes = 512;
  std::size_t svd_size = 64;
  std::uint64_t seed = 20260101;
  double fast_tolerance = 1e-8;
  double svd_tolerance = 1e-6;
};

/// Randomized fast-vs-quadrature comparisons followed by one power-iteration-vs-SVD case.
std::vector<OracleReport> oracle_suite(const OracleOptions& options = {});

/// Dense SVD oracle for the largest singular value.
double dense_largest_singular_value(const ComplexMatrix& a);

}  // namespace qfourier
