#pragma once

#include <functional>

namespace fussi {

// Worker cap: min(hardware_concurrency, FUSSI_THREADS if set).
int thread_budget();

// Runs f(i) for i in [0, n) across the thread budget with a static block
// partition. Each index is processed exactly once; callers get determinism
// by writing results into per-index slots.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace fussi
