#pragma once

#include <cstddef>
#include <functional>

namespace rvd {

/// Worker count: RVD_WORKERS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Work items
/// are claimed dynamically; callers write results by index so output order
/// never depends on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  int workers = worker_count());

}  // namespace rvd
