#pragma once

#include <cstddef>
#include <functional>

namespace pendmel {

/// Worker count: PENDULUM_MELNIKOV_THREADS if set to a positive integer,
/// otherwise the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index is visited exactly once; results written by index are therefore
/// independent of scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pendmel
