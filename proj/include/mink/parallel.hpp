#pragma once

#include <cstddef>
#include <functional>

namespace mink {

/// Worker count from MINK_THREADS (0 or unset = hardware concurrency).
std::size_t thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() threads. fn must only
/// write to slots owned by i; callers reduce afterwards in index order.
/// Nested calls from inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace mink
