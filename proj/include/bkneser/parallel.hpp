#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bkneser {

/// Splits [0, total) into `threads` contiguous chunks and runs
/// fn(chunk, begin, end) on each. Chunk boundaries depend only on
/// (total, threads), so callers that reduce partial results in chunk order
/// get identical output for any worker count. Rethrows the first exception
/// by chunk index.
template <class Fn>
void for_each_chunk(std::uint64_t total, int threads, Fn&& fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](std::uint64_t chunk) {
    const std::uint64_t begin = total * chunk / workers;
    const std::uint64_t end = total * (chunk + 1) / workers;
    try {
      fn(static_cast<int>(chunk), begin, end);
    } catch (...) {
      errors[chunk] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t c = 0; c < workers; ++c) pool.emplace_back(body, c);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace bkneser
