#pragma once

#include <cstddef>
#include <functional>

namespace sunsys {

// Worker count: hardware concurrency, capped by SUNSYS_THREADS when set.
unsigned worker_count();

// Runs body(begin, end) over contiguous chunks of [0, n) on up to
// worker_count() threads.  Chunk boundaries depend only on n and the worker
// count, so callers that merge per-chunk results in chunk order stay
// deterministic.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace sunsys
