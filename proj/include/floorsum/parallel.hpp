#pragma once

// Ordered parallel map over an index range.
//
// The range is cut into fixed-size blocks. Workers pull block numbers from a
// shared counter and buffer their output per block; blocks are handed to the
// consumer strictly in index order, one window at a time. The consumer sees
// the same sequence for any worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace floorsum {

struct ParallelOptions {
  unsigned jobs = 1;
  std::size_t block_size = 256;
  std::size_t blocks_per_window = 64;
};

/// Calls produce(i) for every i in [0, count) across `jobs` threads and feeds
/// the results to consume(i, result) in increasing i. If consume returns
/// false, no further windows are started and the call returns false.
/// Exceptions from produce are rethrown on the calling thread.
template <typename Produce, typename Consume>
bool ordered_parallel_map(std::uint64_t count, const ParallelOptions& options, Produce&& produce,
                          Consume&& consume) {
  using Result = decltype(produce(std::uint64_t{0}));
  const std::size_t block = std::max<std::size_t>(options.block_size, 1);
  const std::size_t window_blocks = std::max<std::size_t>(options.blocks_per_window, options.jobs);
  const std::uint64_t window_items = static_cast<std::uint64_t>(block) * window_blocks;

  for (std::uint64_t window_start = 0; window_start < count; window_start += window_items) {
    const std::uint64_t window_end = std::min<std::uint64_t>(count, window_start + window_items);
    const auto window_count = static_cast<std::size_t>(window_end - window_start);
    const std::size_t blocks = (window_count + block - 1) / block;
    std::vector<std::vector<Result>> results(blocks);

    std::atomic<std::size_t> next_block{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
      for (;;) {
        const std::size_t b = next_block.fetch_add(1);
        if (b >= blocks) {
          return;
        }
        try {
          const std::uint64_t first = window_start + static_cast<std::uint64_t>(b) * block;
          const std::uint64_t last = std::min<std::uint64_t>(window_end, first + block);
          auto& out = results[b];
          out.reserve(static_cast<std::size_t>(last - first));
          for (std::uint64_t i = first; i < last; ++i) {
            out.push_back(produce(i));
          }
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
          next_block.store(blocks);
          return;
        }
      }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(blocks)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }

    std::uint64_t index = window_start;
    for (auto& block_results : results) {
      for (auto& result : block_results) {
        if (!consume(index, std::move(result))) {
          return false;
        }
        ++index;
      }
    }
  }
  return true;
}

}  // namespace floorsum
