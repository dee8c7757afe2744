#pragma once

#include <functional>

namespace rdcalib {

// Worker count: `requested` when positive, otherwise hardware concurrency,
// in both cases capped by the RD_CALIB_THREADS environment variable.
int resolve_thread_count(int requested);

// Runs body(0..count-1) on a small worker pool. The body must confine its
// writes to per-index slots; indices are claimed atomically so the partition
// is scheduling-dependent but the per-index work is not.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace rdcalib
