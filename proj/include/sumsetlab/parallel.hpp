#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sumsetlab {

// Requested worker count, with 0 (or negative) meaning hardware concurrency.
int resolve_threads(int requested);

// Runs fn(worker_id, task_index) for every task in [0, n_tasks), pulling
// task indices from a shared atomic counter. With one worker everything runs
// inline on the calling thread. The first exception thrown by any worker is
// rethrown.
template <class Fn>
void parallel_for_dynamic(std::uint64_t n_tasks, int workers, Fn&& fn) {
  if (workers <= 1 || n_tasks <= 1) {
    for (std::uint64_t i = 0; i < n_tasks; ++i) fn(0, i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&](int worker_id) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n_tasks) break;
        fn(worker_id, i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sumsetlab
