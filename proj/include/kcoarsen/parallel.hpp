// Copyright 2026 The kcoarsen Authors
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

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace kcoarsen {

/// Worker configuration shared by every data-parallel operation.
///
/// Results never depend on `workers`: each parallel region writes disjoint
/// output slots and per-chunk partial results are merged in chunk order.
struct Parallelism {
  unsigned workers = 1;

  static Parallelism hardware() {
    return {std::max(1u, std::thread::hardware_concurrency())};
  }
};

/// Splits [0, n) into at most `par.workers` contiguous chunks and calls
/// `body(begin, end, chunk)` for each, one thread per chunk. Returns the
/// number of chunks used; the calling thread runs chunk 0.
template <typename Body>
std::size_t parallel_for(std::size_t n, const Parallelism& par, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, par.workers);
  const std::size_t chunks = std::min(workers, std::max<std::size_t>(1, n));
  if (chunks == 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return 1;
  }
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::jthread> threads;
  threads.reserve(chunks - 1);
  for (std::size_t c = 1; c < chunks; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    threads.emplace_back([&body, begin, end, c] { body(begin, end, c); });
  }
  body(std::size_t{0}, std::min(n, step), std::size_t{0});
  return chunks;
}

}  // namespace kcoarsen
