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
#include <functional>

namespace qfourier {

/// Worker count: QFOURIER_THREADS when set and positive, else the hardware concurrency.
unsigned worker_count();

/// Runs body(begin, end) over [0, n) split into contiguous chunks. Chunks are
/// independent, so results never depend on how they are scheduled.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qfourier
