#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cycloschur {

/// Worker count for enumeration sweeps: CYCLOSCHUR_THREADS when it holds a
/// positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_threads();

/// Runs task(i) for i in [0, count) on up to worker_threads() threads.
/// Tasks are claimed in index order; callers store results by index, so the
/// merged output does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace cycloschur
