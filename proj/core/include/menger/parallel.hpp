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

#pragma once

#include <functional>
#include <vector>

namespace menger {

/// Worker count for the triple loops. Reads MENGER_THREADS on first use
/// (unset or 0 = hardware concurrency).
int thread_count();

/// Override the worker count; 0 restores the environment default.
void set_thread_count(int n);

/**
 * Run fn(b) for b = 0..n_blocks-1 on up to thread_count() threads. Callers
 * keep one partial result per block and reduce them in block order, so the
 * result does not depend on the thread count. The first exception thrown by
 * any block is rethrown.
 */
void parallel_blocks(int n_blocks, const std::function<void(int)>& fn);

/**
 * Split the outer index k = 0..M-1 of a loop over i < j < k into
 * contiguous ranges of roughly equal triple counts. Returns n+1 boundaries.
 */
std::vector<int> triple_block_bounds(int M, int n_blocks);

/// Fixed number of reduction blocks used by the triple loops.
inline constexpr int kTripleBlocks = 16;

}  // namespace menger
