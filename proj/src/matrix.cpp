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

#include "qfourier/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "qfourier/parallel.hpp"

namespace qfourier {

namespace {
// Fixed partition for the adjoint product so the reduction order never
// depends on the worker count.
constexpr std::size_t kAdjointBlocks = 32;
}  // namespace

std::vector<std::complex<double>> ComplexMatrix::apply(
    std::span<const std::complex<double>> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<std::complex<double>> y(rows_);
  parallel_for(rows_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto* a = data_.data() + i * cols_;
      std::complex<double> acc = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) acc += a[j] * x[j];
      y[i] = acc;
    }
  });
  return y;
}

std::vector<std::complex<double>> ComplexMatrix::apply_adjoint(
    std::span<const std::complex<double>> x) const {
  if (x.size() != rows_) throw std::invalid_argument("matrix-vector size mismatch");
  const std::size_t blocks = std::min(kAdjointBlocks, std::max<std::size_t>(rows_, 1));
  const std::size_t per_block = (rows_ + blocks - 1) / blocks;
  std::vector<std::vector<std::complex<double>>> partial(blocks);
  parallel_for(blocks, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      auto& acc = partial[b];
      acc.assign(cols_, 0.0);
      const std::size_t i_end = std::min(rows_, (b + 1) * per_block);
      for (std::size_t i = b * per_block; i < i_end; ++i) {
        const auto* a = data_.data() + i * cols_;
        const auto xi = x[i];
        for (std::size_t j = 0; j < cols_; ++j) acc[j] += std::conj(a[j]) * xi;
      }
    }
  });
  std::vector<std::complex<double>> y(cols_);
  for (const auto& acc : partial) {
    for (std::size_t j = 0; j < cols_; ++j) y[j] += acc[j];
  }
  return y;
}

}  // namespace qfourier
