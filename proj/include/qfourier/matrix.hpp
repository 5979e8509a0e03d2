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
#include <span>
#include <vector>

namespace qfourier {

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const std::complex<double>> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<std::complex<double>> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  std::span<const std::complex<double>> data() const { return data_; }

  /// y = A x
  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> x) const;
  /// y = A^H x
  std::vector<std::complex<double>> apply_adjoint(std::span<const std::complex<double>> x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::complex<double>> data_;
};

}  // namespace qfourier
