#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace harmonic_codes::detail {

// Runs fn(i) for i in [0, n), striding rows across `threads` workers. Each
// index is visited exactly once, so results never depend on thread count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i);
    });
  }
}

}  // namespace harmonic_codes::detail
