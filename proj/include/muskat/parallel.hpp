#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "muskat/types.hpp"

namespace muskat {

/// Worker count for node loops: `requested` if positive, otherwise
/// MUSKAT_THREADS if set, otherwise the hardware concurrency.
inline int worker_count(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MUSKAT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, n) over contiguous chunks. Each index is owned by
/// exactly one worker, so results do not depend on the worker count.
template <typename Body>
void parallel_for(Index n, int workers, Body&& body) {
  workers = std::clamp<int>(workers, 1, static_cast<int>(std::max<Index>(n, 1)));
  if (workers == 1) {
    for (Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  Index failed_at = n;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const Index begin = n * w / workers;
    const Index end = n * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      Index i = begin;
      try {
        for (; i < end; ++i) body(i);
      } catch (...) {
        // keep the lowest failing index so the reported error is reproducible
        std::lock_guard lock(failure_mutex);
        if (i < failed_at) {
          failure = std::current_exception();
          failed_at = i;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace muskat
