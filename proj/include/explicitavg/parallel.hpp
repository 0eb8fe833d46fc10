// Copyright 2026 The explicitavg Authors.
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

#ifndef EXPLICITAVG_PARALLEL_HPP_
#define EXPLICITAVG_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace explicitavg {

// Process-wide worker count used by the heavy zero sums and integrals.
// Results never depend on it: work is split into index-addressed items and
// merged sequentially in index order.
void set_worker_count(unsigned workers);
unsigned worker_count();

namespace detail {
// Set on pool threads so nested parallel_map calls run inline.
inline thread_local bool in_parallel_region = false;
}  // namespace detail

// Evaluates fn(i) for every i in [0, count) and returns the results in index
// order. If several items throw, the exception of the lowest index wins.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const unsigned workers = worker_count();
  if (workers <= 1 || count < 2 || detail::in_parallel_region) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    const bool saved = detail::in_parallel_region;
    detail::in_parallel_region = true;
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) break;
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    detail::in_parallel_region = saved;
  };
  const std::size_t n_threads =
      std::min<std::size_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(n_threads - 1);
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace explicitavg

#endif  // EXPLICITAVG_PARALLEL_HPP_
