#pragma once

#include <cstddef>
#include <functional>

namespace loewner {

/// Worker count: LOEWNER_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Calls fn(i) for i in [0, n) on up to worker_count() threads. Each index is
/// visited once; if any call throws, the exception of the lowest index is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace loewner
