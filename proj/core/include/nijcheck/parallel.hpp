#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nijcheck {

/// Worker count: NIJCHECK_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls f(i) for i in [0, count) on up to thread_count() threads.
///
/// Work is split into contiguous index blocks; callers write results into
/// per-index slots and reduce afterwards in index order, so results do not
/// depend on the thread count. If any call throws, the exception from the
/// lowest failing index is rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t count, F&& f) {
  const std::size_t workers = std::min(thread_count(), count);
  std::vector<std::exception_ptr> errors(count);
  auto run_block = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run_block(0, count);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_block, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace nijcheck
