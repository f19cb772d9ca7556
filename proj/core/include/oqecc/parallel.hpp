#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace oqecc {

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into `chunks` contiguous ranges and runs
// fn(chunk, begin, end) for each, on up to `threads` workers. Callers keep
// per-chunk results and reduce them in chunk order, so the outcome never
// depends on the thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t count, std::size_t chunks, unsigned threads, Fn&& fn) {
  chunks = std::max<std::size_t>(1, chunks);
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c = t; c < chunks; c += threads) fn(c, bounds(c), bounds(c + 1));
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace oqecc
