#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qfano {

/// Resolves a thread-count hint: 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned hint) {
  if (hint != 0) return hint;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// out[i] = fn(i) for i in [0, n).  Work is handed out in fixed-size chunks;
/// the result vector is indexed, so its content never depends on scheduling.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<Result> out(n);
  threads = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  constexpr std::size_t chunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + chunk);
      try {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace qfano
