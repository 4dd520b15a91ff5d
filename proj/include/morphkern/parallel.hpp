#pragma once

#include <cstdint>
#include <functional>

namespace morphkern {

// Worker count: MORPHKERN_THREADS environment variable; 0 or unset means one
// worker per hardware thread.
int worker_count();

// Splits [0, n) into one contiguous block per worker and runs
// fn(begin, end, worker) on each. Blocks must write disjoint output slots;
// outputs are then independent of the worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t, int)>& fn);

}  // namespace morphkern
