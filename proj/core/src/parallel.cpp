// Copyright 2026 The Menger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "menger/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace menger {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
  static const int n = [] {
    const char* s = std::getenv("MENGER_THREADS");
    const int v = s ? std::atoi(s) : 0;
    return v > 0 ? v : 0;
  }();
  return n;
}

}  // namespace

int thread_count() {
  if (const int o = g_override.load(); o > 0) return o;
  if (const int e = env_threads(); e > 0) return e;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(int n) { g_override.store(std::max(n, 0)); }

void parallel_blocks(int n_blocks, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_count(), n_blocks);
  if (workers <= 1) {
    for (int b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (int b = next++; b < n_blocks; b = next++) {
      try {
        fn(b);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<int> triple_block_bounds(int M, int n_blocks) {
  // Triples with largest index k: k(k-1)/2.
  const double total = static_cast<double>(M) * (M - 1) * (M - 2) / 6.0;
  std::vector<int> bounds{0};
  double acc = 0;
  int b = 1;
  for (int k = 0; k < M && b < n_blocks; ++k) {
    acc += 0.5 * k * (k - 1);
    if (acc >= total * b / n_blocks) {
      bounds.push_back(k + 1);
      ++b;
    }
  }
  while (static_cast<int>(bounds.size()) <= n_blocks) bounds.push_back(M);
  return bounds;
}

}  // namespace menger
