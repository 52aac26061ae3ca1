#ifndef GEVREYKIT_ERRORS_HPP
#define GEVREYKIT_ERRORS_HPP

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gevreykit {

// Thrown by pade_continue when the Pade linear system is rank deficient.
// Callers are expected to retry with lower orders (m-1, n-1).
struct DegenerateApproximant : std::runtime_error {
  explicit DegenerateApproximant(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a pole of the continuation approximant sits within the guard
// distance of a Laplace integration ray.
struct RayObstructed : std::runtime_error {
  explicit RayObstructed(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure: a defect, not a recoverable condition.
[[noreturn]] inline void internal_check_failed(const char* expr,
                                               const char* file, int line) {
  std::fprintf(stderr, "gevreykit internal check failed: %s (%s:%d)\n", expr,
               file, line);
  std::abort();
}

}  // namespace gevreykit

#define GK_INTERNAL_CHECK(expr)                                      \
  do {                                                               \
    if (!(expr)) ::gevreykit::internal_check_failed(#expr, __FILE__, \
                                                    __LINE__);       \
  } while (0)

#endif
