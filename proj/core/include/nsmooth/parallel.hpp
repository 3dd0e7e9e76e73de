#pragma once

#include <cstddef>
#include <functional>

namespace nsmooth {

// Worker count: NEWTON_SMOOTHING_THREADS when set (clamped to >= 1),
// otherwise the hardware concurrency.
int thread_count();

// Runs fn(slot) for slot in [0, n) across thread_count() workers.
// Slots are preassigned (round-robin), so results indexed by slot are
// byte-identical for every worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nsmooth
