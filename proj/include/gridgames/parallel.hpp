#pragma once

#include <cstdint>
#include <functional>

namespace gridgames {

/// Worker count: `requested` if positive, else $GRIDGAMES_JOBS if set, else
/// the hardware concurrency (at least 1).
int resolve_jobs(int requested = 0);

/// Runs fn(i) for every i in [0, count) on `jobs` threads. Indices are handed
/// out in increasing order; fn must be safe to call concurrently. The first
/// exception thrown by fn is rethrown after all workers stop.
void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& fn);

}  // namespace gridgames
