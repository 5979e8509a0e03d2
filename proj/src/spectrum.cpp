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

#include "qfourier/spectrum.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <fftw3.h>

#include "qfourier/parallel.hpp"

namespace qfourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxFftLength = std::size_t{1} << 24;

// fftw's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// In-place 1-D complex FFT; sign +1 computes sum_m b_m exp(+2 pi i k m / L).
void fft_in_place(std::vector<cplx>& buf, int sign) {
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(buf.size()), data, data,
                            sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw could not build a plan");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

std::vector<cplx> discrete_spectrum(const GridSpec& source, std::span<const cplx> weighted,
                                    std::span<const double> freqs) {
  if (weighted.size() != source.count()) {
    throw std::invalid_argument("weighted samples do not match the source grid");
  }
  const auto y = source.nodes();
  std::vector<cplx> out(freqs.size());
  parallel_for(freqs.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double w = freqs[k];
      cplx acc = 0.0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (weighted[j] == cplx(0.0)) continue;
        const double phase = w * y[j];
        acc += weighted[j] * cplx(std::cos(phase), std::sin(phase));
      }
      out[k] = acc;
    }
  });
  return out;
}

std::optional<std::size_t> fft_length_for(double source_spacing, double freq_step) {
  if (!(source_spacing > 0.0) || freq_step == 0.0 || !std::isfinite(freq_step)) {
    return std::nullopt;
  }
  const double length = kTwoPi / (std::abs(freq_step) * source_spacing);
  const double rounded = std::round(length);
  if (rounded < 1.0 || rounded > static_cast<double>(kMaxFftLength)) return std::nullopt;
  if (std::abs(length - rounded) > 1e-9 * length) return std::nullopt;
  return static_cast<std::size_t>(rounded);
}

UniformSpectrum discrete_spectrum_uniform(const GridSpec& source, std::span<const cplx> weighted,
                                          double first, double step, std::size_t count) {
  if (weighted.size() != source.count()) {
    throw std::invalid_argument("weighted samples do not match the source grid");
  }
  const auto length = fft_length_for(source.spacing(), step);
  if (!length) {
    std::vector<double> freqs(count);
    for (std::size_t k = 0; k < count; ++k) freqs[k] = first + static_cast<double>(k) * step;
    return {discrete_spectrum(source, weighted, freqs), false};
  }

  const std::size_t L = *length;
  std::vector<cplx> buckets(L);
  for (std::size_t j = 0; j < source.count(); ++j) {
    if (weighted[j] == cplx(0.0)) continue;
    buckets[j % L] += weighted[j] * std::polar(1.0, first * source.node(j));
  }
  fft_in_place(buckets, step > 0.0 ? +1 : -1);

  const double y0 = source.lo();
  std::vector<cplx> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double shift = static_cast<double>(k) * step * y0;
    out[k] = std::polar(1.0, shift) * buckets[k % L];
  }
  return {std::move(out), true};
}

GridSpec dual_grid(const GridSpec& source) {
  const std::size_t n = source.count();
  const double step = kTwoPi / (static_cast<double>(n) * source.spacing());
  const double half = static_cast<double>(n / 2);
  return {-half * step, (static_cast<double>(n - 1) - half) * step, n};
}

}  // namespace qfourier
