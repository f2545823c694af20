#ifndef MULTSUB_PARALLEL_HPP
#define MULTSUB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace multsub {

inline constexpr std::uint64_t kChunkSize = 65536;

/// MULTSUB_THREADS if set and positive, else the hardware concurrency.
unsigned default_thread_count();

/*
 * Splits [begin, end) into fixed chunks of kChunkSize and evaluates
 * fn(lo, hi) on each, returning the results in chunk order. Chunk
 * boundaries depend only on the range, so any in-order fold of the result
 * is identical for every thread count.
 */
template <class Fn>
auto map_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn fn)
    -> std::vector<decltype(fn(begin, end))> {
  using R = decltype(fn(begin, end));
  const std::uint64_t chunks = end > begin ? (end - begin + kChunkSize - 1) / kChunkSize : 0;
  std::vector<R> out(chunks);
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));

  auto run = [&](std::uint64_t c) {
    const std::uint64_t lo = begin + c * kChunkSize;
    out[c] = fn(lo, std::min(end, lo + kChunkSize));
  };
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run(c);
    return out;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
        try {
          run(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = chunks;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace multsub

#endif  // MULTSUB_PARALLEL_HPP
