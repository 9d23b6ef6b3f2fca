#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace wegner {

/* Runs fn(i) for i = 0..n-1 on `threads` workers (0 = hardware count).
 * Work items are independent; callers store results by index, so the
 * output never depends on scheduling.  The first exception thrown by any
 * worker is rethrown after all workers joined. */
inline void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  unsigned requested = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  if (requested == 0) requested = 1;
  const unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(n, requested));

  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace wegner
