#pragma once

#include <cstddef>
#include <functional>

namespace shl {

/// Number of worker threads: SHL_THREADS when set (clamped to >= 1),
/// otherwise the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, count), splitting the range over the workers.
/// Falls back to a plain loop for a single worker or a short range.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace shl
