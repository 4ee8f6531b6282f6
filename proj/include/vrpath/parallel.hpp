#pragma once

#include <cstddef>
#include <functional>

namespace vrpath {

// 0 means use all available cores.
void set_thread_count(int n);
int effective_thread_count();

// Runs fn(i) for i in [0, n). Iterations must be independent; results are
// identical to sequential execution regardless of schedule.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

} // namespace vrpath
