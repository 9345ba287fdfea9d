#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace kleinzeta {

// 0 means "use hardware concurrency"; always returns at least 1.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into contiguous chunks, runs fn(lo, hi) on each in a
// worker pool, and returns the per-chunk results in chunk order so that any
// reduction done by the caller is deterministic regardless of thread count.
template <typename R>
std::vector<R> map_chunks(std::uint64_t total, unsigned threads,
                          const std::function<R(std::uint64_t, std::uint64_t)>& fn) {
  unsigned n = resolve_threads(threads);
  if (total == 0) return {};
  std::uint64_t nchunks = n;
  if (nchunks > total) nchunks = total;
  std::vector<R> results(static_cast<std::size_t>(nchunks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nchunks));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nchunks));
  std::uint64_t base = total / nchunks, rem = total % nchunks, lo = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    std::uint64_t hi = lo + base + (c < rem ? 1 : 0);
    pool.emplace_back([&, c, lo, hi] {
      try {
        results[static_cast<std::size_t>(c)] = fn(lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}
