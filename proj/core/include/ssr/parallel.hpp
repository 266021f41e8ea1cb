// Copyright 2026 The ssr Authors.
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
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ssr {

/// Fork-join pool. `run` hands out task indices to the workers and the
/// calling thread, and returns once every worker has checked in for that
/// round. A `run` issued from inside a task executes inline on that thread.
class ThreadPool {
 public:
  /// `threads` counts the calling thread; 0 selects hardware concurrency.
  explicit ThreadPool(std::size_t threads = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  std::size_t size() const noexcept { return workers_.size() + 1; }

  void run(std::size_t count, const std::function<void(std::size_t)>& task);

  static std::size_t hardware_threads();

 private:
  void worker_loop();
  void drain();

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  std::mutex run_mutex_;

  const std::function<void(std::size_t)>* task_ = nullptr;
  std::size_t count_ = 0;
  std::atomic<std::size_t> next_{0};
  std::size_t active_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
  std::exception_ptr error_;
};

/// Row blocking shared by every parallel kernel. Chunk boundaries depend only
/// on the row count and `chunk_rows`, never on the thread count, so reductions
/// combined in chunk order are bit-identical for any pool size.
struct ChunkPlan {
  std::size_t rows = 0;
  std::size_t chunk_rows = 4096;

  std::size_t count() const noexcept {
    return rows == 0 ? 0 : (rows + chunk_rows - 1) / chunk_rows;
  }
  std::size_t begin(std::size_t c) const noexcept { return c * chunk_rows; }
  std::size_t end(std::size_t c) const noexcept {
    return std::min(rows, (c + 1) * chunk_rows);
  }
};

/// Calls `body(begin, end, chunk)` for each chunk of `plan`, in parallel when a
/// pool with more than one thread is supplied.
template <class Body>
void for_each_chunk(ThreadPool* pool, const ChunkPlan& plan, Body&& body) {
  const std::size_t chunks = plan.count();
  if (pool == nullptr || pool->size() == 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(plan.begin(c), plan.end(c), c);
    return;
  }
  const std::function<void(std::size_t)> task = [&](std::size_t c) {
    body(plan.begin(c), plan.end(c), c);
  };
  pool->run(chunks, task);
}

}  // namespace ssr
