#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace prefnet {

// Worker count from PREFNET_JOBS, else hardware concurrency (at least 1).
int default_jobs();
// jobs <= 0 means default_jobs().
int resolve_jobs(int jobs);

// Smallest index i in [0, count) with pred(i) true. Workers claim indices in
// increasing blocks and stop once a smaller hit is known, so the answer is the
// same for any worker count. Exceptions from pred are rethrown.
std::optional<std::size_t> parallel_first(std::size_t count, int jobs,
                                          const std::function<bool(std::size_t)>& pred);

// Calls body(begin, end, worker) over disjoint chunks covering [0, count).
void parallel_chunks(std::size_t count, int jobs,
                     const std::function<void(std::size_t, std::size_t, int)>& body);

}  // namespace prefnet
