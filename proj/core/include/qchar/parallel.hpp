#ifndef QCHAR_PARALLEL_HPP
#define QCHAR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qchar {

/// Worker count for internal parallelism: QCHAR_THREADS if set to a positive
/// integer, otherwise std::thread::hardware_concurrency() (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, count), possibly on several threads. Callers
/// write results into per-index slots, so output never depends on scheduling.
/// The first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qchar

#endif  // QCHAR_PARALLEL_HPP
