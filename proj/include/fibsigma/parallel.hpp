#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fibsigma {

// Runs fn(block_index) for 0 .. blocks-1 on up to `threads` workers. Block
// boundaries are fixed by the caller, so writing results into per-block slots
// and folding them in block order gives thread-count-independent output.
template <class Fn>
void parallel_for_blocks(std::size_t blocks, unsigned threads, Fn&& fn) {
  if (blocks == 0) return;
  if (threads <= 1 || blocks == 1) {
    for (std::size_t i = 0; i < blocks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= blocks) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

inline unsigned default_thread_count() {
  if (const char* env = std::getenv("FIBSIGMA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace fibsigma
