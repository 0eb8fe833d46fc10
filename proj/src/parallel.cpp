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

#include "explicitavg/parallel.hpp"

#include <algorithm>

namespace explicitavg {
namespace {
std::atomic<unsigned> g_workers{1};
}  // namespace

void set_worker_count(unsigned workers) {
  g_workers.store(std::max(1u, workers), std::memory_order_relaxed);
}

unsigned worker_count() { return g_workers.load(std::memory_order_relaxed); }

}  // namespace explicitavg
