#pragma once

#include <cstddef>
#include <functional>

namespace jacgb {

// Thread count resolution: explicit value > 0 wins, else the JACGB_THREADS
// environment variable, else 1.
int resolve_threads(int requested);

// Runs fn(0..n-1) on up to `threads` workers. Each index is handled exactly
// once and results must be written to per-index slots, so the outcome does
// not depend on scheduling.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace jacgb
