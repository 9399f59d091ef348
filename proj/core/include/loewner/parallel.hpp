#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace loewner {

// Thread count resolution: explicit request > LOEWNER_THREADS env > hardware.
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LOEWNER_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, n_items).
// Chunk boundaries do not depend on the worker count, so callers that store
// per-chunk partials and reduce them in chunk order get results that are
// bit-identical for any number of threads.
inline int64_t chunk_count(int64_t n_items, int64_t chunk_size) {
  return (n_items + chunk_size - 1) / chunk_size;
}

inline void parallel_chunks(int64_t n_items, int64_t chunk_size, int threads,
                            const std::function<void(int64_t, int64_t, int64_t)>& fn) {
  const int64_t n_chunks = chunk_count(n_items, chunk_size);
  if (n_chunks <= 0) return;
  threads = resolve_thread_count(threads);
  if (threads <= 1 || n_chunks == 1) {
    for (int64_t c = 0; c < n_chunks; ++c) {
      fn(c, c * chunk_size, std::min(n_items, (c + 1) * chunk_size));
    }
    return;
  }
  std::atomic<int64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      int64_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      fn(c, c * chunk_size, std::min(n_items, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  int n_threads = int(std::min<int64_t>(threads, n_chunks));
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace loewner
