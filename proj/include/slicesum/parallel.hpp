#pragma once

#include <cstdint>
#include <functional>

namespace slicesum {

// 0 resolves to the hardware thread count (capped at 32).
int resolve_threads(int requested);

// Runs fn(i) for i in [0, n) on `threads` workers with a static contiguous
// partition, so the work assignment does not depend on scheduling. Each
// worker writes only to indices it owns; rethrows the first exception.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn);

}  // namespace slicesum
