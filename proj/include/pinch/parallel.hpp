#pragma once

#include <cstddef>
#include <functional>

namespace pinch {

/// Worker pool size: hardware concurrency, clamped by the
/// PINCH_SE_THREADS environment variable when set (>=1).
int worker_count();

/// Run body(i) for i in [0, n) across worker_count() threads. Each index
/// is dispatched exactly once; callers write results into pre-sized
/// per-index slots so the output is identical for any thread count.
/// Exceptions from body are captured and rethrown on the calling thread.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace pinch
