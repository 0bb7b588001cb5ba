#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace elastoweyl::internal {

// Evaluates fn(i) for i in [0, n) on a worker pool and returns the results
// indexed by i.  Each slot is computed independently and merged in index
// order, so the output is bit-identical whatever the scheduling.
template <typename Result>
std::vector<Result> indexed_parallel_map(
    std::size_t n, bool parallel,
    const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out(n);
  if (!parallel || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return out;
}

}  // namespace elastoweyl::internal
