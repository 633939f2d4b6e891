#pragma once

#include <cstddef>
#include <functional>

namespace fiatcell {

/// Number of worker threads to use. Honors FIATCELL_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads using static
/// contiguous chunks. Callers write results into per-index slots, so the
/// outcome never depends on scheduling. Exceptions from the body are
/// rethrown on the calling thread (the one from the lowest chunk wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t workers = worker_count());

}  // namespace fiatcell
