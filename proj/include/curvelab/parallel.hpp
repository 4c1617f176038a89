#pragma once

#include <cstddef>
#include <functional>

namespace curvelab {

/// Worker count: hardware concurrency, capped by the CURVELAB_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Runs `body(i)` for i in [0, count). Each index is executed exactly once;
/// callers write results into per-index slots so the outcome does not depend
/// on scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace curvelab
