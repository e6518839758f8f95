#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqvb::par {

/// Toggle the OpenMP paths at runtime (tests compare against the serial twins,
/// the CLI exposes --serial).
void set_enabled(bool on);
bool enabled();

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

template <class F>
double max_reduce_serial(std::size_t n, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = f(i);
    if (v > acc) acc = v;
  }
  return acc;
}

/// Max of f(i) over [0, n). f must be pure.
template <class F>
double max_reduce(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (enabled() && n > 1024) {
    double acc = 0.0;
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for reduction(max : acc) schedule(static)
    for (long long i = 0; i < nn; ++i) {
      double v = f(static_cast<std::size_t>(i));
      if (v > acc) acc = v;
    }
    return acc;
  }
#endif
  return max_reduce_serial(n, f);
}

template <class P>
std::size_t first_violation_serial(std::size_t n, P&& bad) {
  for (std::size_t i = 0; i < n; ++i)
    if (bad(i)) return i;
  return npos;
}

/// Smallest index in [0, n) where bad(i) holds, or npos.
template <class P>
std::size_t first_violation(std::size_t n, P&& bad) {
#ifdef _OPENMP
  if (enabled() && n > 4096) {
    unsigned long long found = static_cast<unsigned long long>(npos);
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for reduction(min : found) schedule(static)
    for (long long i = 0; i < nn; ++i) {
      if (bad(static_cast<std::size_t>(i))) {
        unsigned long long v = static_cast<unsigned long long>(i);
        if (v < found) found = v;
      }
    }
    return static_cast<std::size_t>(found);
  }
#endif
  return first_violation_serial(n, bad);
}

}  // namespace eqvb::par
