#ifndef GEVREYKIT_PARALLEL_HPP
#define GEVREYKIT_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gevreykit {

// Worker cap: explicit argument wins, then GEVREYKIT_THREADS, then 1.
inline unsigned thread_budget(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GEVREYKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

// Index-parallel loop with deterministic output: body(i) must write only to
// slot i of caller-owned storage.  The first exception thrown by any worker
// is rethrown on the calling thread after the join.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& body,
                         unsigned threads = 0) {
  unsigned n = thread_budget(threads);
  if (n <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  n = std::min<std::size_t>(n, count);
  std::vector<std::thread> pool;
  pool.reserve(n);
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < count; i += n) body(i);
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gevreykit

#endif
