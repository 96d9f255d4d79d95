#ifndef HESSCOH_PARALLEL_HH
#define HESSCOH_PARALLEL_HH

#include <functional>

namespace hesscoh {

// worker cap: HESSCOH_THREADS if set (>= 1), else hardware concurrency
int thread_budget();

// run fn(0..n-1); fan-out across workers, deterministic per-index results
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace hesscoh

#endif
