#pragma once

#include <cstdint>
#include <functional>

namespace anderson {

// Worker count: hardware concurrency, capped by the ANDERSON_LAB_THREADS
// environment variable when set.
int max_threads();

// Runs body(lo, hi) over disjoint chunks of [0, count). Chunks are handed out
// dynamically, so bodies must not depend on which worker runs them; callers
// keep determinism by writing to preallocated slots or by merging integer
// accumulators.
void parallel_chunks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t)>& body,
                     int threads = 0);

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body,
                  int threads = 0);

}  // namespace anderson
