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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qfourier/sampling.hpp"

namespace qfourier {

// Discrete spectra of weighted samples g_j on a source grid y_j:
//
//   G(w) = sum_j exp(i w y_j) g_j
//
// Every transform in this library reduces to G evaluated at some set of
// frequencies, so this is the one place where summation happens on fast paths.

/// Direct evaluation at arbitrary frequencies, ascending j for every w.
std::vector<cplx> discrete_spectrum(const GridSpec& source, std::span<const cplx> weighted,
                                    std::span<const double> freqs);

/// FFT length L with |step| * h * L == 2 pi (to 1e-9 relative), if one exists.
std::optional<std::size_t> fft_length_for(double source_spacing, double freq_step);

struct UniformSpectrum {
  std::vector<cplx> values;
  bool used_fft = false;
};

/// Evaluates G at first + k * step, k = 0..count-1. Uses an FFT of length L
/// (samples folded modulo L) when the frequency step is dual to the source
/// spacing, otherwise falls back to direct summation.
UniformSpectrum discrete_spectrum_uniform(const GridSpec& source, std::span<const cplx> weighted,
                                          double first, double step, std::size_t count);

/// Canonical dual grid of a source grid: count nodes spaced 2 pi / (count h),
/// centred so that node count/2 is the zero frequency.
GridSpec dual_grid(const GridSpec& source);

}  // namespace qfourier
