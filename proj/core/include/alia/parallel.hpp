#pragma once

#include <functional>

namespace alia {

/// Worker cap: ALIA_THREADS when set, hardware concurrency otherwise.
int thread_budget();

/// Runs fn(i) for i in [0, n). Tasks must be independent; results must be
/// aggregated by index so output stays deterministic across thread counts.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace alia
