#pragma once

#include <cstddef>
#include <functional>

namespace spincorr {

/// Worker count: SPINCORR_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
unsigned thread_count();

/// Calls body(begin, end) on disjoint chunks covering [0, n). Chunks are at
/// least `min_chunk` long. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, std::size_t min_chunk, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace spincorr
