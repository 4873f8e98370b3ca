#pragma once

#include <cstddef>
#include <functional>

namespace cramer {

// Worker thread budget. CRAMER_GAPS_THREADS caps it; 0 or unset means
// hardware concurrency. Always at least 1.
int thread_budget();

// Runs fn(i) for every i in [0, n). Items are claimed from a shared
// counter, so which thread runs which item is unspecified; results are
// deterministic as long as fn(i) writes only to its own slot i.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cramer
