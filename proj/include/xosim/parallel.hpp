#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace xosim {

/// Worker count from XOSIM_THREADS (default 1, capped at hardware).
inline int default_thread_count() {
  const char* env = std::getenv("XOSIM_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (hw > 0 && n > hw) n = hw;
  return n;
}

/// Runs fn(i) for i in [0, n). Each index must touch only its own output
/// slot; results are then independent of scheduling.
template <typename Fn>
void parallel_for(long long n, int threads, Fn fn) {
  if (threads <= 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        long long i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace xosim
