#pragma once

#include <cstddef>
#include <functional>

namespace daubloc {

/// Worker count: DAUBLOC_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
/// write results into pre-sized slots so output order never depends on the
/// schedule. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace daubloc
