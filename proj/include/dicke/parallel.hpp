// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>

#include <omp.h>

namespace dicke {

/// Caps the worker count used for per-block and per-probe parallel loops.
inline void set_num_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

inline int num_threads() { return omp_get_max_threads(); }

/// Runs f(i) for i in [0, n). Each index must write to its own output slot;
/// the first exception thrown by any worker is rethrown on the caller.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  if (n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(dicke_parallel_for_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace dicke
