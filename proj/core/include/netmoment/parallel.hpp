#pragma once

#include <cstddef>
#include <functional>

namespace netmoment {

// Worker count: NETMOMENT_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n) over contiguous chunks. Each index is
// processed exactly once, so per-index writes are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace netmoment
