#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace coarse_embed {

/// Worker count: COARSE_EMBED_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
inline std::size_t worker_count() {
  if (const char* env = std::getenv("COARSE_EMBED_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, runs body(chunk, begin, end) on
/// each, and returns once all have finished. Chunk boundaries depend only on
/// count and the number of chunks, so callers reduce per-chunk results in
/// chunk order to stay deterministic. The first exception is rethrown.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t chunks, Body&& body) {
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  if (chunks == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace coarse_embed
