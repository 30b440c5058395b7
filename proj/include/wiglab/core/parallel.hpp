#pragma once

#include <cstddef>
#include <functional>

namespace wiglab {

/// Process-wide worker count for parallel maps (0 = hardware concurrency).
void set_thread_count(int n);
int thread_count();

/// Static-partition parallel map over [0, n). Bodies must write only to
/// disjoint outputs; results are then independent of the thread count, which
/// keeps every pipeline bitwise reproducible.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace wiglab
