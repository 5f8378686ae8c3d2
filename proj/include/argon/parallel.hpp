#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace argon {

/// Worker count: `requested` if non-zero, else ARGON_THREADS if set to a
/// positive number, else the hardware concurrency.
inline std::size_t worker_count(std::size_t requested = 0) {
  if (requested != 0)
    return requested;
  if (const char* env = std::getenv("ARGON_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0)
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Splits [begin, end) into contiguous chunks and runs body(lo, hi, chunk)
/// on up to `workers` threads. Chunk indices follow range order, so results
/// stored per chunk merge back in sequential order. Exceptions from any worker
/// are rethrown on the calling thread.
template <class Body>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t workers, std::size_t chunks, Body&& body) {
  if (end <= begin)
    return;
  chunks = std::max<std::size_t>(1, chunks);
  const std::uint64_t total = end - begin;
  const std::uint64_t step = (total + chunks - 1) / chunks;
  auto chunk_lo = [&](std::size_t c) { return std::min(end, begin + step * c); };

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      if (chunk_lo(c) < chunk_lo(c + 1))
        body(chunk_lo(c), chunk_lo(c + 1), c);
    return;
  }

  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t c;
      {
        std::lock_guard lock(mu);
        if (next >= chunks || failure)
          return;
        c = next++;
      }
      try {
        if (chunk_lo(c) < chunk_lo(c + 1))
          body(chunk_lo(c), chunk_lo(c + 1), c);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, chunks); ++w)
    pool.emplace_back(worker);
  pool.clear();
  if (failure)
    std::rethrow_exception(failure);
}

/// Collects every value v in [begin, end) with keep(v), in ascending order,
/// independent of how the range was partitioned.
template <class Keep, class Make>
auto parallel_collect(std::uint64_t begin, std::uint64_t end, std::size_t workers, Keep&& keep, Make&& make) {
  using T = decltype(make(begin));
  const std::size_t chunks = workers <= 1 ? 1 : workers * 4;
  std::vector<std::vector<T>> parts(chunks);
  parallel_chunks(begin, end, workers, chunks, [&](std::uint64_t lo, std::uint64_t hi, std::size_t c) {
    for (std::uint64_t v = lo; v < hi; ++v)
      if (keep(v))
        parts[c].push_back(make(v));
  });
  std::vector<T> out;
  for (auto& p : parts)
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

} // namespace argon
