#pragma once

#include <cstddef>
#include <functional>

namespace affine_fock {

// Worker count: AFFINE_FOCK_THREADS if set to a positive integer, otherwise
// the hardware concurrency (at least 1).
unsigned thread_cap();

// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
// write into per-index slots so results never depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace affine_fock
