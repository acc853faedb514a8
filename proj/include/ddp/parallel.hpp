#pragma once

#include <functional>

namespace ddp {

// Process-wide cap on worker threads. 0 restores the hardware default.
void set_max_threads(int t);
int max_threads();

// Runs fn(i) for i in [0, n) on a deterministic block partition of the index
// range. Results must be written to per-index slots; with that discipline the
// output is identical for any thread count. Exceptions propagate (first one
// wins).
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace ddp
