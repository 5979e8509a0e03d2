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

#include "qfourier/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qfourier/parallel.hpp"
#include "qfourier/spectrum.hpp"

namespace qfourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

bool windowed(Family family) {
  return family == Family::t_lambda || family == Family::f1 || family == Family::f2 ||
         family == Family::oscillatory;
}

struct Interval {
  double lo, hi;
  bool empty() const { return !(lo <= hi); }
};

Interval intersect(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

// Source y-range that can contribute, and target x-range that can be nonzero.
Interval source_extent(const TransformSpec& spec, const GridSpec& sources) {
  Interval all{sources.lo(), sources.hi()};
  if (!windowed(spec.family) || !spec.window) return all;
  const Box& m = spec.window->support();
  return intersect(all, {m.y0, m.y1});
}

Interval target_extent(const TransformSpec& spec, const GridSpec& targets) {
  Interval all{targets.lo(), targets.hi()};
  if (!windowed(spec.family) || !spec.window || spec.window->one_dimensional()) return all;
  const Box& m = spec.window->support();
  return intersect(all, {m.x0, m.x1});
}

template <class Rate>
double max_over_box(Interval xs, Interval ys, Rate rate, std::initializer_list<double> extra_x) {
  if (xs.empty() || ys.empty()) return 0.0;
  constexpr int kProbes = 129;
  double best = 0.0;
  auto probe = [&](double x) {
    for (int jy = 0; jy < kProbes; ++jy) {
      const double y = ys.lo + (ys.hi - ys.lo) * jy / (kProbes - 1);
      best = std::max(best, std::abs(rate(x, y)));
    }
  };
  for (int ix = 0; ix < kProbes; ++ix) probe(xs.lo + (xs.hi - xs.lo) * ix / (kProbes - 1));
  for (double x : extra_x) {
    if (x >= xs.lo && x <= xs.hi) probe(x);
  }
  return best;
}

ResolutionCheck finish_check(double rate, double spacing) {
  ResolutionCheck check;
  check.max_rate = rate;
  check.spacing = spacing;
  check.allowed_spacing = rate > 0.0 ? std::numbers::pi / (4.0 * rate)
                                     : std::numeric_limits<double>::infinity();
  check.ok = spacing <= check.allowed_spacing * (1.0 + 1e-12);
  return check;
}

void require_family(const TransformSpec& spec, Family family) {
  spec.validate();
  if (spec.family != family) {
    throw std::invalid_argument(std::string("transform spec has family ") +
                                to_string(spec.family) + ", expected " + to_string(family));
  }
}

/// sum_j K(x_i, y_j) w_j f_j in ascending j, per target.
std::vector<cplx> quadrature(const SampledFunction1D& f, const TransformSpec& spec,
                             const GridSpec& targets) {
  const GridSpec& sources = f.grid();
  const auto y = sources.nodes();
  const auto w = sources.weights();

  // Sources that can contribute at all.
  std::vector<std::size_t> active;
  active.reserve(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (f[j] == cplx(0.0)) continue;
    if (windowed(spec.family) && spec.window && spec.window->separable() &&
        spec.window->y_factor(y[j]) == 0.0) {
      continue;
    }
    active.push_back(j);
  }

  std::vector<cplx> out(targets.count());
  parallel_for(targets.count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double x = targets.node(i);
      cplx acc = 0.0;
      for (std::size_t j : active) acc += (kernel(spec, x, y[j]) * w[j]) * f[j];
      out[i] = acc;
    }
  });
  return out;
}

TransformResult make_result(const GridSpec& targets, std::vector<cplx> values, Path path,
                            bool fell_back, bool used_fft, const ResolutionCheck& res,
                            std::string note = {}) {
  TransformResult r{SampledFunction1D(targets, std::move(values)), path, fell_back, used_fft,
                    !res.ok, std::move(note)};
  if (!res.ok) {
    if (!r.note.empty()) r.note += "; ";
    r.note += "under-resolved: spacing exceeds pi/(4*max phase rate)";
  }
  return r;
}

/// Weighted samples g_j = f_j w_j m(y_j) for a source-side multiplier m.
template <class Multiplier>
std::vector<cplx> weighted_samples(const SampledFunction1D& f, Multiplier m) {
  const GridSpec& grid = f.grid();
  std::vector<cplx> g(grid.count());
  for (std::size_t j = 0; j < grid.count(); ++j) {
    if (f[j] == cplx(0.0)) continue;
    g[j] = f[j] * grid.weight(j) * m(grid.node(j));
  }
  return g;
}

/// G at s * x_i for every target node.
UniformSpectrum spectrum_at_scaled_targets(const GridSpec& sources, std::span<const cplx> g,
                                           const GridSpec& targets, double scale,
                                           double offset = 0.0) {
  return discrete_spectrum_uniform(sources, g, scale * targets.lo() + offset,
                                   scale * targets.spacing(), targets.count());
}

struct PathChoice {
  Path path;
  bool fell_back;
};

PathChoice choose(Path requested, bool fast_available) {
  switch (requested) {
    case Path::quadrature: return {Path::quadrature, false};
    case Path::fast: return fast_available ? PathChoice{Path::fast, false}
                                           : PathChoice{Path::quadrature, true};
    case Path::automatic: return {fast_available ? Path::fast : Path::quadrature, false};
  }
  return {Path::quadrature, false};
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::fourier: return "fourier";
    case Family::t_lambda: return "T_lambda";
    case Family::f1: return "F1";
    case Family::f2: return "F2";
    case Family::hq: return "HQ";
    case Family::oscillatory: return "oscillatory";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "fourier") return Family::fourier;
  if (s == "t_lambda" || s == "tlambda" || s == "t") return Family::t_lambda;
  if (s == "f1") return Family::f1;
  if (s == "f2") return Family::f2;
  if (s == "hq") return Family::hq;
  if (s == "oscillatory" || s == "osc") return Family::oscillatory;
  throw std::invalid_argument("unknown transform family '" + name + "'");
}

TransformSpec TransformSpec::fourier() { return {}; }

TransformSpec TransformSpec::t_lambda(QuadraticPhase q, Window w, double lambda) {
  TransformSpec s{Family::t_lambda, q, std::move(w), lambda, 1};
  s.validate();
  return s;
}

TransformSpec TransformSpec::f1(QuadraticPhase q, Window w) {
  TransformSpec s{Family::f1, q, std::move(w), 1.0, 1};
  s.validate();
  return s;
}

TransformSpec TransformSpec::f2(QuadraticPhase q, Window w) {
  TransformSpec s{Family::f2, q, std::move(w), 1.0, 1};
  s.validate();
  return s;
}

TransformSpec TransformSpec::hq(QuadraticPhase q, int z_sign) {
  TransformSpec s{Family::hq, q, std::nullopt, 1.0, z_sign};
  s.validate();
  return s;
}

TransformSpec TransformSpec::oscillatory(HomogeneousPhase phase, Window chi, double lambda) {
  TransformSpec s{Family::oscillatory, std::move(phase), std::move(chi), lambda, 1};
  s.validate();
  return s;
}

void TransformSpec::validate() const {
  switch (family) {
    case Family::fourier:
      return;
    case Family::t_lambda:
    case Family::oscillatory:
      if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("lambda must be a positive finite number");
      }
      break;
    case Family::hq:
      if (window) throw std::invalid_argument("HQ carries no window");
      if (z_sign != 1 && z_sign != -1) throw std::invalid_argument("z_sign must be +1 or -1");
      break;
    case Family::f1:
    case Family::f2:
      break;
  }
  if (family == Family::oscillatory) {
    if (!std::holds_alternative<HomogeneousPhase>(phase)) {
      throw std::invalid_argument("oscillatory family needs a homogeneous phase");
    }
  } else if (!std::holds_alternative<QuadraticPhase>(phase)) {
    throw std::invalid_argument(std::string(to_string(family)) + " needs a quadratic phase");
  }
  if (windowed(family) && !window) {
    throw std::invalid_argument(std::string(to_string(family)) + " needs a window");
  }
}

const QuadraticPhase& TransformSpec::quadratic() const {
  if (const auto* q = std::get_if<QuadraticPhase>(&phase)) return *q;
  throw std::invalid_argument("transform spec has no quadratic phase");
}

const HomogeneousPhase& TransformSpec::homogeneous() const {
  if (const auto* s = std::get_if<HomogeneousPhase>(&phase)) return *s;
  throw std::invalid_argument("transform spec has no homogeneous phase");
}

std::string TransformSpec::id() const {
  std::string out = to_string(family);
  if (const auto* q = std::get_if<QuadraticPhase>(&phase)) out += ":" + q->describe();
  if (const auto* s = std::get_if<HomogeneousPhase>(&phase)) out += ":" + s->describe();
  return out;
}

cplx kernel(const TransformSpec& spec, double x, double y) {
  switch (spec.family) {
    case Family::fourier:
      return std::polar(kInvSqrtTwoPi, x * y);
    case Family::t_lambda: {
      const double psi = (*spec.window)(x, y);
      if (psi == 0.0) return 0.0;
      return psi * std::polar(1.0, spec.lambda * spec.quadratic()(x, y));
    }
    case Family::f1: {
      const double psi = (*spec.window)(x, y);
      if (psi == 0.0) return 0.0;
      const auto& q = spec.quadratic();
      return psi * std::polar(1.0, -x * ((q.a() * y + q.b()) * y + q.c()));
    }
    case Family::f2: {
      const double psi = (*spec.window)(x, y);
      if (psi == 0.0) return 0.0;
      const auto& q = spec.quadratic();
      return psi * std::polar(1.0, -((q.a() * x + q.b()) * x + q.c()) * y);
    }
    case Family::hq: {
      const auto& q = spec.quadratic();
      const double pref = 0.5 * std::sqrt(std::abs(q.b()) / kTwoPi);
      const cplx z(0.0, static_cast<double>(spec.z_sign));
      return pref * (std::polar(1.0, -q(x, y)) + z * std::polar(1.0, -q(-x, y)));
    }
    case Family::oscillatory: {
      const double chi = (*spec.window)(x, y);
      if (chi == 0.0) return 0.0;
      return chi * std::polar(1.0, spec.lambda * spec.homogeneous()(x, y));
    }
  }
  return 0.0;
}

ResolutionCheck check_resolution(const TransformSpec& spec, const GridSpec& sources,
                                 const GridSpec& targets) {
  spec.validate();
  const Interval xs = target_extent(spec, targets);
  const Interval ys = source_extent(spec, sources);
  double rate = 0.0;
  switch (spec.family) {
    case Family::fourier:
      rate = max_over_box(xs, ys, [](double x, double) { return x; }, {});
      break;
    case Family::t_lambda: {
      const auto& q = spec.quadratic();
      rate = spec.lambda * max_over_box(xs, ys, [&](double x, double y) { return q.d_dy(x, y); }, {});
      break;
    }
    case Family::f1: {
      const auto& q = spec.quadratic();
      rate = max_over_box(xs, ys, [&](double x, double y) { return x * (2.0 * q.a() * y + q.b()); }, {});
      break;
    }
    case Family::f2: {
      const auto& q = spec.quadratic();
      const double vertex = q.a() != 0.0 ? -q.b() / (2.0 * q.a()) : 0.0;
      rate = max_over_box(
          xs, ys, [&](double x, double) { return (q.a() * x + q.b()) * x + q.c(); }, {vertex});
      break;
    }
    case Family::hq: {
      const auto& q = spec.quadratic();
      rate = max_over_box(
          xs, ys,
          [&](double x, double y) {
            return std::max(std::abs(q.d_dy(x, y)), std::abs(q.d_dy(-x, y)));
          },
          {});
      break;
    }
    case Family::oscillatory: {
      const auto& s = spec.homogeneous();
      rate = spec.lambda * max_over_box(xs, ys, [&](double x, double y) { return s.d_dy(x, y); }, {0.0});
      break;
    }
  }
  return finish_check(rate, sources.spacing());
}

ResolutionCheck check_target_resolution(const TransformSpec& spec, const GridSpec& sources,
                                        const GridSpec& targets) {
  spec.validate();
  const Interval xs = target_extent(spec, targets);
  const Interval ys = source_extent(spec, sources);
  double rate = 0.0;
  switch (spec.family) {
    case Family::fourier:
      rate = max_over_box(xs, ys, [](double, double y) { return y; }, {});
      break;
    case Family::t_lambda: {
      const auto& q = spec.quadratic();
      rate = spec.lambda * max_over_box(xs, ys, [&](double x, double y) { return q.d_dx(x, y); }, {});
      break;
    }
    case Family::f1: {
      const auto& q = spec.quadratic();
      rate = max_over_box(
          xs, ys, [&](double, double y) { return (q.a() * y + q.b()) * y + q.c(); }, {});
      break;
    }
    case Family::f2: {
      const auto& q = spec.quadratic();
      rate = max_over_box(xs, ys, [&](double x, double y) { return (2.0 * q.a() * x + q.b()) * y; }, {});
      break;
    }
    case Family::hq: {
      const auto& q = spec.quadratic();
      rate = max_over_box(
          xs, ys,
          [&](double x, double y) {
            return std::max(std::abs(q.d_dx(x, y)), std::abs(q.d_dx(-x, y)));
          },
          {});
      break;
    }
    case Family::oscillatory: {
      const auto& s = spec.homogeneous();
      rate = spec.lambda * max_over_box(xs, ys, [&](double x, double y) { return s.d_dx(x, y); }, {0.0});
      break;
    }
  }
  return finish_check(rate, targets.spacing());
}

TransformResult fourier_unitary(const SampledFunction1D& f, const GridSpec& targets, Path path) {
  const auto spec = TransformSpec::fourier();
  const auto res = check_resolution(spec, f.grid(), targets);
  const auto choice = choose(path, true);
  if (choice.path == Path::quadrature) {
    return make_result(targets, quadrature(f, spec, targets), choice.path, false, false, res);
  }
  const auto g = weighted_samples(f, [](double) { return 1.0; });
  auto spec_values = spectrum_at_scaled_targets(f.grid(), g, targets, 1.0);
  for (auto& v : spec_values.values) v *= kInvSqrtTwoPi;
  return make_result(targets, std::move(spec_values.values), Path::fast, false,
                     spec_values.used_fft, res);
}

TransformResult apply_T_lambda(const SampledFunction1D& f, const TransformSpec& spec,
                               const GridSpec& targets, Path path) {
  require_family(spec, Family::t_lambda);
  const auto res = check_resolution(spec, f.grid(), targets);
  const Window& psi = *spec.window;
  const auto choice = choose(path, psi.separable());
  const std::string note = choice.fell_back ? "non-separable window: quadrature fallback" : "";
  if (choice.path == Path::quadrature) {
    return make_result(targets, quadrature(f, spec, targets), choice.path, choice.fell_back,
                       false, res, note);
  }

  // T f(x) = exp(i lambda (a x^2 + d x)) psi_x(x) G(b lambda x),
  // g(y) = exp(i lambda (c y^2 + e y)) psi_y(y) f(y).
  const auto& q = spec.quadratic();
  const double lambda = spec.lambda;
  const auto g = weighted_samples(
      f, [&](double y) { return psi.y_factor(y) * std::polar(1.0, lambda * q.y_part(y)); });
  auto spectrum = spectrum_at_scaled_targets(f.grid(), g, targets, q.b() * lambda);
  std::vector<cplx> out(targets.count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = targets.node(i);
    const double px = psi.x_factor(x);
    if (px == 0.0) continue;
    out[i] = px * std::polar(1.0, lambda * q.x_part(x)) * spectrum.values[i];
  }
  return make_result(targets, std::move(out), Path::fast, false, spectrum.used_fft, res);
}

TransformResult apply_F1(const SampledFunction1D& f, const TransformSpec& spec,
                         const GridSpec& targets, Path path) {
  require_family(spec, Family::f1);
  const auto res = check_resolution(spec, f.grid(), targets);
  const Window& psi = *spec.window;
  const auto& q = spec.quadratic();
  // The chirp exp(-i a x y^2) couples x and y, so only a = 0 factors.
  const bool fast_ok = psi.separable() && q.a() == 0.0;
  const auto choice = choose(path, fast_ok);
  std::string note;
  if (choice.fell_back) {
    note = psi.separable() ? "a != 0: quadrature fallback" : "non-separable window: quadrature fallback";
  }
  if (choice.path == Path::quadrature) {
    return make_result(targets, quadrature(f, spec, targets), choice.path, choice.fell_back,
                       false, res, note);
  }

  // F1 f(x) = exp(-i c x) psi_x(x) G(-b x), g = psi_y f.
  const auto g = weighted_samples(f, [&](double y) { return cplx(psi.y_factor(y)); });
  auto spectrum = spectrum_at_scaled_targets(f.grid(), g, targets, -q.b());
  std::vector<cplx> out(targets.count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = targets.node(i);
    const double px = psi.x_factor(x);
    if (px == 0.0) continue;
    out[i] = px * std::polar(1.0, -q.c() * x) * spectrum.values[i];
  }
  return make_result(targets, std::move(out), Path::fast, false, spectrum.used_fft, res);
}

TransformResult apply_F2(const SampledFunction1D& f, const TransformSpec& spec,
                         const GridSpec& targets, Path path) {
  require_family(spec, Family::f2);
  const auto res = check_resolution(spec, f.grid(), targets);
  const Window& psi = *spec.window;
  const auto& q = spec.quadratic();
  const auto choice = choose(path, psi.separable());
  const std::string note = choice.fell_back ? "non-separable window: quadrature fallback" : "";
  if (choice.path == Path::quadrature) {
    return make_result(targets, quadrature(f, spec, targets), choice.path, choice.fell_back,
                       false, res, note);
  }

  // F2 f(x) = psi_x(x) G(-omega(x)), omega(x) = a x^2 + b x + c, g = psi_y f.
  const auto g = weighted_samples(f, [&](double y) { return cplx(psi.y_factor(y)); });
  UniformSpectrum spectrum;
  if (q.a() == 0.0) {
    spectrum = spectrum_at_scaled_targets(f.grid(), g, targets, -q.b(), -q.c());
  } else {
    std::vector<double> freqs(targets.count());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      const double x = targets.node(i);
      freqs[i] = -((q.a() * x + q.b()) * x + q.c());
    }
    spectrum.values = discrete_spectrum(f.grid(), g, freqs);
  }
  std::vector<cplx> out(targets.count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double px = psi.x_factor(targets.node(i));
    if (px == 0.0) continue;
    out[i] = px * spectrum.values[i];
  }
  return make_result(targets, std::move(out), Path::fast, false, spectrum.used_fft, res);
}

TransformResult apply_HQ(const SampledFunction1D& f, const TransformSpec& spec,
                         const GridSpec& targets, Path path) {
  require_family(spec, Family::hq);
  const auto res = check_resolution(spec, f.grid(), targets);
  const auto choice = choose(path, true);
  if (choice.path == Path::quadrature) {
    return make_result(targets, quadrature(f, spec, targets), choice.path, false, false, res);
  }

  // HQ f(x) = sqrt(|b|/2pi)/2 [exp(-i(a x^2 + d x)) G(-b x) + z exp(-i(a x^2 - d x)) G(b x)],
  // g1(y) = exp(-i(c y^2 + e y)) f(y).
  const auto& q = spec.quadratic();
  const auto g1 = weighted_samples(f, [&](double y) { return std::polar(1.0, -q.y_part(y)); });
  auto minus = spectrum_at_scaled_targets(f.grid(), g1, targets, -q.b());
  auto plus = spectrum_at_scaled_targets(f.grid(), g1, targets, q.b());
  const double pref = 0.5 * std::sqrt(std::abs(q.b()) / kTwoPi);
  const cplx z(0.0, static_cast<double>(spec.z_sign));
  std::vector<cplx> out(targets.count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = targets.node(i);
    const double ax2 = q.a() * x * x;
    const double dx = q.d() * x;
    out[i] = pref * (std::polar(1.0, -(ax2 + dx)) * minus.values[i] +
                     z * std::polar(1.0, -(ax2 - dx)) * plus.values[i]);
  }
  return make_result(targets, std::move(out), Path::fast, false, minus.used_fft && plus.used_fft,
                     res);
}

TransformResult apply_oscillatory(const SampledFunction1D& phi, const TransformSpec& spec,
                                  const GridSpec& targets, Path path) {
  require_family(spec, Family::oscillatory);
  const auto res = check_resolution(spec, phi.grid(), targets);
  const auto choice = choose(path, false);
  const std::string note =
      choice.fell_back ? "oscillatory family has no fast path: quadrature fallback" : "";
  return make_result(targets, quadrature(phi, spec, targets), Path::quadrature, choice.fell_back,
                     false, res, note);
}

TransformResult apply(const SampledFunction1D& f, const TransformSpec& spec,
                      const GridSpec& targets, Path path) {
  switch (spec.family) {
    case Family::fourier: return fourier_unitary(f, targets, path);
    case Family::t_lambda: return apply_T_lambda(f, spec, targets, path);
    case Family::f1: return apply_F1(f, spec, targets, path);
    case Family::f2: return apply_F2(f, spec, targets, path);
    case Family::hq: return apply_HQ(f, spec, targets, path);
    case Family::oscillatory: return apply_oscillatory(f, spec, targets, path);
  }
  throw std::invalid_argument("unknown transform family");
}

KernelMatrix build_kernel_matrix(const TransformSpec& spec, const GridSpec& sources,
                                 const GridSpec& targets) {
  spec.validate();
  const std::size_t rows = targets.count();
  const std::size_t cols = sources.count();
  if (cols != 0 && rows > kMaxKernelEntries / cols) {
    throw std::length_error("kernel matrix would exceed 1e8 entries");
  }
  KernelMatrix km{targets, sources, ComplexMatrix(rows, cols),
                  check_resolution(spec, sources, targets)};
  const auto y = sources.nodes();
  const auto w = sources.weights();
  parallel_for(rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double x = targets.node(i);
      auto row = km.entries.row(i);
      for (std::size_t j = 0; j < cols; ++j) row[j] = kernel(spec, x, y[j]) * w[j];
    }
  });
  return km;
}

}  // namespace qfourier
