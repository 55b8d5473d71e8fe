#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gtpoly::detail {

inline std::size_t chunk_count(std::size_t total, std::size_t min_chunk = 256) {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::clamp<std::size_t>(total / min_chunk, 1, hw);
}

/// Runs f(begin, end, chunk) over [0, total) split into contiguous chunks,
/// one thread per chunk. Callers merge per-chunk results by chunk index, so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any chunk is rethrown.
template <class F>
std::size_t parallel_chunks(std::size_t total, F&& f, std::size_t min_chunk = 256) {
  const std::size_t chunks = chunk_count(total, min_chunk);
  if (chunks == 1) {
    f(std::size_t{0}, total, std::size_t{0});
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t b = total * c / chunks, e = total * (c + 1) / chunks;
    pool.emplace_back([&, b, e, c] {
      try {
        f(b, e, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return chunks;
}

}  // namespace gtpoly::detail
