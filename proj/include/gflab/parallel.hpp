#pragma once

#include <cstddef>
#include <functional>

namespace gflab {

/// Worker count: hardware concurrency, capped by GFLAB_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is written by exactly one worker,
/// so results stored by index are independent of scheduling. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gflab
