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

#include "qfourier/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "qfourier/spectrum.hpp"

namespace qfourier {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::size_t nodes_for(double length, double spacing, std::size_t min_nodes) {
  const double n = std::ceil(length / spacing) + 1.0;
  return std::max(min_nodes, static_cast<std::size_t>(n));
}

double allowed(double rate) {
  return rate > 0.0 ? kPi / (4.0 * rate) : std::numeric_limits<double>::infinity();
}

struct Bounds {
  double proof;
  double statement;
};

Bounds bounds_for(const TransformSpec& spec, const Exponent& p) {
  switch (spec.family) {
    case Family::t_lambda: {
      const double c1 = spec.window->sup_bound();
      return {bound_T_lambda(c1, spec.lambda, p), bound_T_lambda_statement(c1, spec.lambda, p)};
    }
    case Family::f1:
    case Family::f2: {
      const double c1 = spec.window->sup_bound();
      const double r = spec.window->diameter();
      return {bound_F(c1, r, p), bound_F_statement(c1, r, p)};
    }
    case Family::hq: {
      const double c = bound_HQ(spec.quadratic().b(), p);
      return {c, c};
    }
    case Family::oscillatory: {
      const Box& m = spec.window->support();
      const double c = bound_oscillatory(spec.window->sup_bound(), m.y1 - m.y0, p);
      return {c, c};
    }
    case Family::fourier:
      break;
  }
  throw std::invalid_argument("no Hausdorff-Young bound for the plain Fourier family");
}

std::optional<double> lambda_of(const TransformSpec& spec) {
  if (spec.family == Family::t_lambda || spec.family == Family::oscillatory) return spec.lambda;
  return std::nullopt;
}

void require_lambdas(const std::vector<double>& lambdas) {
  if (lambdas.size() < 4) throw std::invalid_argument("decay check needs at least 4 lambdas");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (!(lambdas[k] > 0.0) || !std::isfinite(lambdas[k])) {
      throw std::invalid_argument("lambdas must be positive and finite");
    }
    if (k > 0 && !(lambdas[k] > lambdas[k - 1])) {
      throw std::invalid_argument("lambdas must be strictly increasing");
    }
  }
}

struct NormSample {
  double norm;
  std::size_t rows, cols;
  bool under_resolved;
  bool converged;
};

// Grids over [xlo, xhi] x [ylo, yhi] fine enough for both phase guards.
NormSample sample_norm(const TransformSpec& spec, double xlo, double xhi, double ylo, double yhi,
                       const DecayOptions& options) {
  const GridSpec probe_src(ylo, yhi, 2);
  const GridSpec probe_tgt(xlo, xhi, 2);
  const double hy = std::min(options.base.spacing(),
                             allowed(check_resolution(spec, probe_src, probe_tgt).max_rate));
  const double hx = std::min(options.base.spacing(),
                             allowed(check_target_resolution(spec, probe_src, probe_tgt).max_rate));
  const GridSpec sources(ylo, yhi, nodes_for(yhi - ylo, hy, options.min_nodes));
  const GridSpec targets(xlo, xhi, nodes_for(xhi - xlo, hx, options.min_nodes));
  auto km = build_kernel_matrix(spec, sources, targets);
  const bool under = !km.resolution.ok || !check_target_resolution(spec, sources, targets).ok;
  const auto result = operator_norm_2(std::move(km), options.power);
  return {result.value, targets.count(), sources.count(), under, result.converged};
}

void finish_decay(DecayReport& r, int degree) {
  r.slope = fit_loglog_slope(r.lambdas, r.norms);
  r.target_slope = -1.0 / degree;
  r.scaled.resize(r.norms.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < r.norms.size(); ++k) {
    r.scaled[k] = r.norms[k] * std::pow(r.lambdas[k], 1.0 / degree);
    if (r.scaled[k] > r.scaled[best]) best = k;
  }
  r.max_scaled = r.scaled[best];
  r.argmax_lambda = r.lambdas[best];
}

Verdict trust(Verdict v, const DecayReport& r) {
  const bool any_under = std::find(r.under_resolved.begin(), r.under_resolved.end(), true) !=
                         r.under_resolved.end();
  const bool any_slow =
      std::find(r.converged.begin(), r.converged.end(), false) != r.converged.end();
  return (any_under || any_slow) ? Verdict::untrusted : v;
}

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::untrusted: return "untrusted";
  }
  return "?";
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::untrusted || b == Verdict::untrusted) return Verdict::untrusted;
  return Verdict::pass;
}

GridSpec hausdorff_young_targets(const TransformSpec& spec, const GridSpec& sources) {
  if (spec.family != Family::oscillatory) return sources;
  // The bound integrates x over the cutoff support only.
  const Box& m = spec.window->support();
  const GridSpec probe(m.x0, m.x1, 2);
  const double h = std::min(sources.spacing(),
                            allowed(check_target_resolution(spec, sources, probe).max_rate));
  return GridSpec(m.x0, m.x1, nodes_for(m.x1 - m.x0, h, 2));
}

std::vector<InequalityReport> check_hausdorff_young(const TransformSpec& spec,
                                                    const Corpus& corpus,
                                                    const std::vector<Exponent>& p_values,
                                                    const HausdorffYoungOptions& options) {
  spec.validate();
  if (spec.family == Family::fourier) {
    throw std::invalid_argument("Hausdorff-Young check needs a windowed, HQ or oscillatory family");
  }
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  if (p_values.empty()) throw std::invalid_argument("no exponents given");
  for (const auto& p : p_values) interpolation_alpha(p);

  std::vector<InequalityReport> out;
  out.reserve(corpus.size() * p_values.size());
  for (const auto& entry : corpus) {
    const GridSpec targets =
        options.targets ? *options.targets : hausdorff_young_targets(spec, entry.function.grid());
    const auto result = apply(entry.function, spec, targets, options.path);
    const bool under =
        result.under_resolved || !check_target_resolution(spec, entry.function.grid(), targets).ok;

    for (const auto& p : p_values) {
      InequalityReport r;
      r.transform = spec.id();
      r.corpus = entry.id;
      r.p = p;
      r.p1 = conjugate_exponent(p);
      r.lambda = lambda_of(spec);
      r.norm_f = lp_norm(entry.function, p);
      r.lhs = lp_norm(result.output, r.p1);
      const Bounds b = bounds_for(spec, p);
      r.bound_proof = b.proof;
      r.bound_statement = b.statement;
      r.rhs_proof = b.proof * r.norm_f;
      r.rhs_statement = b.statement * r.norm_f;
      r.slack = r.rhs_proof - r.lhs;
      if (p.value() == 1.0) {
        r.tolerance = 1e-12 * r.rhs_proof;
      } else if (spec.family == Family::hq) {
        r.tolerance = 1e-3 * r.norm_f;
      } else {
        r.tolerance = 0.05 * r.rhs_proof;
      }
      r.verdict = r.lhs <= r.rhs_proof + r.tolerance ? Verdict::pass : Verdict::fail;
      r.note = result.note;
      if (under) {
        r.verdict = Verdict::untrusted;
        if (r.note.find("under-resolved") == std::string::npos) {
          if (!r.note.empty()) r.note += "; ";
          r.note += "under-resolved on the target grid";
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<UnitarityReport> check_unitarity_HQ(const QuadraticPhase& q, const Corpus& corpus,
                                                int z_sign, double tolerance) {
  std::vector<UnitarityReport> out;
  for (const double b : {q.b(), -q.b()}) {
    const auto spec = TransformSpec::hq(q.with_b(b), z_sign);
    for (const auto& entry : corpus) {
      UnitarityReport r;
      r.transform = spec.id();
      r.corpus = entry.id;
      r.b = b;
      r.z_sign = z_sign;
      r.tolerance = tolerance;
      r.norm_f = lp_norm(entry.function, Exponent(2.0));
      if (r.norm_f == 0.0) {
        r.skipped = true;
        r.note = "zero-norm input skipped";
        out.push_back(std::move(r));
        continue;
      }
      const auto& grid = entry.function.grid();
      const auto result = apply_HQ(entry.function, spec, grid);
      r.norm_hf = lp_norm(result.output, Exponent(2.0));
      r.ratio = r.norm_hf / r.norm_f;
      r.deviation = std::abs(r.ratio - 1.0);
      r.verdict = r.deviation <= tolerance ? Verdict::pass : Verdict::fail;
      r.note = result.note;
      if (result.under_resolved || !check_target_resolution(spec, grid, grid).ok) {
        r.verdict = Verdict::untrusted;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs two or more paired values");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += std::log(x[k]);
    sy += std::log(y[k]);
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = std::log(x[k]) - mx;
    sxy += dx * (std::log(y[k]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct abscissae");
  return sxy / sxx;
}

DecayReport check_T_lambda_L2_decay(const QuadraticPhase& q, const Window& w,
                                    const std::vector<double>& lambdas,
                                    const DecayOptions& options) {
  require_lambdas(lambdas);
  DecayReport r;
  r.kind = "T_lambda";
  r.phase = q.describe();
  r.lambdas = lambdas;
  const Box& m = w.support();
  for (double lambda : lambdas) {
    const auto spec = TransformSpec::t_lambda(q, w, lambda);
    const auto s = sample_norm(spec, m.x0, m.x1, m.y0, m.y1, options);
    r.norms.push_back(s.norm);
    r.target_nodes.push_back(s.rows);
    r.source_nodes.push_back(s.cols);
    r.under_resolved.push_back(s.under_resolved);
    r.converged.push_back(s.converged);
  }
  finish_decay(r, 2);
  r.scaled_limit = 1.05 * w.sup_bound();
  r.verdict = trust(r.max_scaled <= *r.scaled_limit ? Verdict::pass : Verdict::fail, r);
  return r;
}

DecayReport estimate_oscillatory_decay(const HomogeneousPhase& s, const Window& chi,
                                       const std::vector<double>& lambdas,
                                       const DecayOptions& options) {
  require_lambdas(lambdas);
  if (!chi.one_dimensional()) throw std::invalid_argument("oscillatory cutoff must be a 1-D bump");
  DecayReport r;
  r.kind = "oscillatory";
  r.phase = s.describe();
  r.lambdas = lambdas;
  const int n = s.degree();
  const Box& m = chi.support();
  for (double lambda : lambdas) {
    const auto spec = TransformSpec::oscillatory(s, chi, lambda);
    const double x_max = options.kappa * std::pow(lambda, -1.0 / n);
    const auto ns = sample_norm(spec, -x_max, x_max, m.y0, m.y1, options);
    r.norms.push_back(ns.norm);
    r.target_nodes.push_back(ns.rows);
    r.source_nodes.push_back(ns.cols);
    r.under_resolved.push_back(ns.under_resolved);
    r.converged.push_back(ns.converged);
  }
  finish_decay(r, n);
  Verdict v;
  if (n == 2) {
    v = std::abs(r.slope + 0.5) <= 0.05 ? Verdict::pass : Verdict::fail;
  } else {
    const double mid = std::sqrt(lambdas.front() * lambdas.back());
    v = r.argmax_lambda <= mid ? Verdict::pass : Verdict::fail;
    r.note = "argmax must lie at lambda <= " + std::to_string(mid);
  }
  r.verdict = trust(v, r);
  return r;
}

double dirichlet_approximant(const SampledFunction1D& f, double x, double lambda,
                             double* noise_floor) {
  const GridSpec& grid = f.grid();
  cplx acc = 0.0;
  double magnitude = 0.0;
  for (std::size_t j = 0; j < grid.count(); ++j) {
    if (f[j] == cplx(0.0)) continue;
    const double u = x - grid.node(j);
    const double k = u == 0.0 ? lambda : std::sin(lambda * u) / u;
    const cplx term = f[j] * (grid.weight(j) * k);
    acc += term;
    magnitude += std::abs(term);
  }
  if (noise_floor) *noise_floor = 16.0 * kEps * magnitude / kPi;
  return (acc / kPi).real();
}

LimitReport check_dirichlet_limit(const CorpusEntry& f, double x, const std::vector<double>& lambdas,
                                  double tolerance) {
  const GridSpec& grid = f.function.grid();
  if (!(x > grid.lo() && x < grid.hi())) {
    throw std::invalid_argument("evaluation point must lie inside the grid");
  }
  if (lambdas.empty()) throw std::invalid_argument("no lambdas given");
  LimitReport r;
  r.corpus = f.id;
  r.x = x;
  r.lambdas = lambdas;
  r.tolerance = tolerance;
  const auto limits = one_sided_limits(f.model, x);
  r.target = (0.5 * (limits.left + limits.right)).real();
  if (!std::isfinite(r.target)) throw std::invalid_argument("target is not finite");

  std::vector<double> effective;
  for (double lambda : lambdas) {
    double floor = 0.0;
    const double a = dirichlet_approximant(f.function, x, lambda, &floor);
    const double err = std::abs(a - r.target);
    r.approximants.push_back(a);
    r.errors.push_back(err);
    r.noise_floor.push_back(floor);
    effective.push_back(err <= floor ? 0.0 : err);
  }
  for (std::size_t k = 1; k < effective.size(); ++k) {
    if (effective[k] > 1.1 * effective[k - 1]) r.decreasing = false;
  }
  r.verdict = effective.back() <= tolerance ? Verdict::pass : Verdict::fail;
  if (!r.decreasing) r.note = "errors not decreasing in lambda";
  return r;
}

MinkowskiReport check_minkowski(const ComplexMatrix& table, const std::vector<double>& wx,
                                const std::vector<double>& wy, double s) {
  if (!(s >= 1.0) || !std::isfinite(s)) throw std::invalid_argument("Minkowski exponent must be >= 1");
  if (wx.size() != table.rows() || wy.size() != table.cols()) {
    throw std::invalid_argument("weights do not match the table shape");
  }
  MinkowskiReport r;
  r.s = s;
  double lhs = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    cplx inner = 0.0;
    const auto row = table.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) inner += wy[j] * row[j];
    lhs += wx[i] * std::pow(std::abs(inner), s);
  }
  r.lhs = std::pow(lhs, 1.0 / s);
  double rhs = 0.0;
  for (std::size_t j = 0; j < table.cols(); ++j) {
    double inner = 0.0;
    for (std::size_t i = 0; i < table.rows(); ++i) inner += wx[i] * std::pow(std::abs(table(i, j)), s);
    rhs += wy[j] * std::pow(inner, 1.0 / s);
  }
  r.rhs = rhs;
  r.slack = r.rhs - r.lhs;
  r.verdict = r.lhs <= r.rhs + 1e-12 * r.rhs ? Verdict::pass : Verdict::fail;
  return r;
}

std::vector<MinkowskiReport> minkowski_suite(std::size_t tables, const std::vector<double>& s_values,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(2, 24);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<MinkowskiReport> out;
  for (std::size_t t = 0; t < tables; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    ComplexMatrix table(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const double re = gauss(rng);
        table(i, j) = cplx(re, gauss(rng));
      }
    }
    std::vector<double> wx(rows), wy(cols);
    for (auto& v : wx) v = weight(rng);
    for (auto& v : wy) v = weight(rng);
    for (double s : s_values) {
      auto r = check_minkowski(table, wx, wy, s);
      r.table = "random#" + std::to_string(t);
      out.push_back(std::move(r));
    }
  }
  return out;
}

BecknerReport beckner_check(const Exponent& p, const GridSpec& grid, double tolerance) {
  BecknerReport r;
  r.p = p.value();
  r.tolerance = tolerance;
  const auto y = grid.nodes();
  std::vector<cplx> f(grid.count()), g(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    f[j] = std::exp(-kPi * y[j] * y[j]);
    g[j] = f[j] * grid.weight(j);
  }
  // hat f(xi) = sum_j w_j f_j exp(-2 pi i xi y_j) on the same grid.
  const auto hat = discrete_spectrum_uniform(grid, g, -2.0 * kPi * grid.lo(),
                                             -2.0 * kPi * grid.spacing(), grid.count());
  const auto w = grid.weights();
  r.norm_f = lp_norm(f, w, p);
  r.norm_hat = lp_norm(hat.values, w, conjugate_exponent(p));
  r.ratio = r.norm_hat / r.norm_f;
  r.constant = beckner_constant(p, 1);
  r.relative_error = std::abs(r.ratio - r.constant) / r.constant;
  r.verdict = r.relative_error <= tolerance ? Verdict::pass : Verdict::fail;
  return r;
}

double dense_largest_singular_value(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

std::vector<OracleReport> oracle_suite(const OracleOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * 0.5 * (unit(rng) + 1.0); };
  auto nonzero = [&](double lo, double hi) {
    const double m = uniform(lo, hi);
    return unit(rng) < 0.0 ? -m : m;
  };

  constexpr Family kFamilies[] = {Family::fourier, Family::t_lambda, Family::f1, Family::f2,
                                  Family::hq};
  std::vector<OracleReport> out;
  for (std::size_t k = 0; k < options.specs; ++k) {
    const Family family = kFamilies[k % 5];
    const double half = uniform(4.0, 8.0);
    const GridSpec sources(-half, half, options.nodes);
    // Draws are sequenced one per statement so the specs do not depend on the compiler.
    const double sigma = uniform(0.5, 2.0);
    const double center = uniform(-1.0, 1.0);
    const double omega = uniform(-2.0, 2.0);
    const auto f = make_modulated_gaussian(sources, sigma, center, omega);
    const BumpProfile wx{uniform(-0.5, 0.5), uniform(0.5, 2.0), 1.0};
    const BumpProfile wy{uniform(-0.5, 0.5), uniform(0.5, 2.0), 1.0};
    const Window w = Window::separable(wx, wy);
    // a = 0 keeps the F1 fast path and the uniform F2 path; F2 alternates.
    const bool zero_a = family == Family::f1 || (family == Family::f2 && (k / 5) % 2 == 0);
    const double a = zero_a ? 0.0 : uniform(-1.5, 1.5);
    const double b = nonzero(0.5, 1.5);
    const double c = uniform(-1.5, 1.5);
    const double d = uniform(-1.5, 1.5);
    const double e = uniform(-1.5, 1.5);
    const QuadraticPhase q(a, b, c, d, e);

    TransformSpec spec;
    double scale = 1.0;
    switch (family) {
      case Family::fourier: spec = TransformSpec::fourier(); break;
      case Family::t_lambda: {
        const double lambda = uniform(1.0, 8.0);
        spec = TransformSpec::t_lambda(q, w, lambda);
        scale = q.b() * lambda;
        break;
      }
      case Family::f1: spec = TransformSpec::f1(q, w); scale = -q.b(); break;
      case Family::f2: spec = TransformSpec::f2(q, w); scale = -q.b(); break;
      case Family::hq: spec = TransformSpec::hq(q, unit(rng) < 0.0 ? -1 : 1); scale = q.b(); break;
      case Family::oscillatory: break;
    }

    // Even specs sit on the FFT lattice of their frequency map.
    std::optional<GridSpec> targets;
    if (k % 2 == 0) {
      const double step = 2.0 * kPi /
                          (static_cast<double>(options.nodes) * sources.spacing() * std::abs(scale));
      const double lo = -step * static_cast<double>(options.nodes / 2);
      targets.emplace(lo, lo + step * static_cast<double>(options.nodes - 1), options.nodes);
    } else {
      const double t = uniform(2.0, 6.0);
      targets.emplace(-t, t, options.nodes);
    }

    const auto quad = apply(f, spec, *targets, Path::quadrature);
    const auto fast = apply(f, spec, *targets, Path::fast);
    double diff = 0.0;
    for (std::size_t i = 0; i < targets->count(); ++i) {
      diff = std::max(diff, std::abs(fast.output[i] - quad.output[i]));
    }
    const double ref = max_abs(quad.output.values());

    OracleReport r;
    r.name = "fast_vs_quadrature#" + std::to_string(k);
    r.detail = spec.id();
    r.value = diff;
    r.reference = ref;
    r.relative_error = ref > 0.0 ? diff / ref : diff;
    r.tolerance = options.fast_tolerance;
    r.used_fft = fast.used_fft;
    r.verdict = r.relative_error <= r.tolerance ? Verdict::pass : Verdict::fail;
    if (fast.path != Path::fast) {
      r.verdict = Verdict::fail;
      r.detail += " (fast path not taken)";
    }
    out.push_back(std::move(r));
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(options.svd_size, options.svd_size);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double re = gauss(rng);
      a(i, j) = cplx(re, gauss(rng));
    }
  }
  const auto power = largest_singular_value(a);
  const double dense = dense_largest_singular_value(a);
  OracleReport r;
  r.name = "power_iteration_vs_svd";
  r.detail = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " random complex";
  r.value = power.value;
  r.reference = dense;
  r.relative_error = std::abs(power.value - dense) / dense;
  r.tolerance = options.svd_tolerance;
  r.verdict = r.relative_error <= r.tolerance && power.converged ? Verdict::pass : Verdict::fail;
  out.push_back(std::move(r));
  return out;
}

}  // namespace qfourier
