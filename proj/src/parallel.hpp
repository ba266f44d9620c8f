// Copyright 2026 The Robonet Authors
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

#ifndef ROBONET__PARALLEL_HPP_
#define ROBONET__PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace robonet::detail
{

/// Runs task(i) for i in [0, count) on up to `workers` threads. Each task
/// writes only its own output slot, so results are schedule-independent.
/// The first exception thrown by a task is rethrown on the caller.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task && task)
{
  const auto threads = std::min<std::size_t>(std::max(1U, workers), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      task(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          try {
            task(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace robonet::detail

#endif  // ROBONET__PARALLEL_HPP_
