// Copyright 2026 The Telegraph Authors
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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace telegraph {

/// Worker count: TELEGRAPH_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int thread_count();

/// Computes make_block(b) for b = 0..n_blocks-1 on up to `threads` workers
/// and combines the results with a pairwise tree whose shape depends only
/// on n_blocks. The result is therefore bitwise independent of the thread
/// count. merge(left, right) must fold `right` into `left`.
template <typename Acc, typename MakeBlock, typename Merge>
Acc ordered_pairwise_reduce(std::int64_t n_blocks, int threads,
                            MakeBlock&& make_block, Merge&& merge) {
  std::vector<std::pair<int, Acc>> stack;
  auto push = [&](Acc&& acc) {
    stack.emplace_back(0, std::move(acc));
    while (stack.size() >= 2 &&
           stack[stack.size() - 1].first == stack[stack.size() - 2].first) {
      auto right = std::move(stack.back());
      stack.pop_back();
      merge(stack.back().second, right.second);
      ++stack.back().first;
    }
  };

  const int workers = std::max(1, threads);
  std::vector<std::optional<Acc>> wave(static_cast<std::size_t>(workers));
  for (std::int64_t start = 0; start < n_blocks; start += workers) {
    const int count =
        static_cast<int>(std::min<std::int64_t>(workers, n_blocks - start));
    if (count == 1) {
      wave[0].emplace(make_block(start));
    } else {
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(count));
      for (int w = 0; w < count; ++w) {
        pool.emplace_back([&, w] {
          try {
            wave[w].emplace(make_block(start + w));
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (int w = 0; w < count; ++w) {
      push(std::move(*wave[w]));
      wave[w].reset();
    }
  }

  // Fold the leftover partial sums, newest into older.
  while (stack.size() >= 2) {
    auto right = std::move(stack.back());
    stack.pop_back();
    merge(stack.back().second, right.second);
  }
  return std::move(stack.front().second);
}

}  // namespace telegraph
