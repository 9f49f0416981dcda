#pragma once

/// \file parallel.hpp
/// Deterministic data-parallel reduction over an index range.
///
/// [0, total) is cut into fixed contiguous chunks.  Workers claim chunks from
/// a shared counter and fold them into private accumulators; accumulators are
/// merged after all workers join.  Chunk boundaries depend only on total and
/// chunk size, never on the worker count, so any merge that is associative
/// and commutative (integer counters) gives identical results for every
/// worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rootcensus {

/// Worker count from ROOTCENSUS_WORKERS, else hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("ROOTCENSUS_WORKERS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// body(acc, chunk_index, begin, end) folds [begin, end) into acc;
/// merge(into, from) combines accumulators.
template <class Acc, class Init, class Body, class Merge>
Acc parallel_chunks(std::uint64_t total, std::uint64_t chunk, unsigned workers, Init make_acc, Body body, Merge merge) {
  if (workers < 1) workers = 1;
  if (chunk < 1) chunk = 1;
  const std::uint64_t nchunks = total / chunk + (total % chunk != 0);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(nchunks, 1)));

  std::vector<Acc> accs;
  accs.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) accs.push_back(make_acc());

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto run = [&](unsigned w) {
    try {
      while (true) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= nchunks) break;
        const std::uint64_t begin = c * chunk;
        body(accs[w], c, begin, std::min(total, begin + chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(nchunks, std::memory_order_relaxed);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Acc out = std::move(accs[0]);
  for (unsigned w = 1; w < workers; ++w) merge(out, accs[w]);
  return out;
}

}  // namespace rootcensus
