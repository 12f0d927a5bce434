#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace radchaos::par {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1;
}

/// Step count per enumeration block. Fixed (never derived from the worker
/// count) so per-block accumulation histories, and therefore results, are
/// identical for any number of threads.
inline constexpr std::uint64_t kBlockSteps = std::uint64_t{1} << 16;

inline std::uint64_t block_count(std::uint64_t total, std::uint64_t block) {
  return total == 0 ? 0 : (total - 1) / block + 1;
}

/// Evaluates fn(block_index) for block_index in [0, nblocks) on up to
/// `threads` workers and returns the results indexed by block. Blocks may be
/// claimed in any order; callers must fold the returned vector in index
/// order to stay deterministic.
template <class R, class Fn>
std::vector<R> run_blocks(std::uint64_t nblocks, unsigned threads, Fn&& fn) {
  std::vector<R> results(static_cast<std::size_t>(nblocks));
  if (nblocks == 0) return results;

  unsigned workers = resolve_threads(threads);
  if (workers > nblocks) workers = static_cast<unsigned>(nblocks);

  if (workers <= 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) results[b] = fn(b);
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::exception_ptr> errors(workers);

  auto worker = [&](unsigned wid) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= nblocks) break;
        results[b] = fn(b);
      }
    } catch (...) {
      errors[wid] = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace radchaos::par
