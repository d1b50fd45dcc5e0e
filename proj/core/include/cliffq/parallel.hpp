#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cliffq {

/// Splits [0, count) into contiguous chunks, one per worker, runs
/// `chunk(begin, end)` on each and returns the per-chunk results in chunk
/// order, so reductions over them are deterministic for any worker count.
template <class ChunkFn>
auto parallel_chunks(std::size_t count, unsigned workers, ChunkFn chunk)
    -> std::vector<decltype(chunk(std::size_t{}, std::size_t{}))> {
  using Result = decltype(chunk(std::size_t{}, std::size_t{}));
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = chunk(0, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        results[w] = chunk(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace cliffq
