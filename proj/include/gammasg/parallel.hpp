#pragma once

#include <cstddef>
#include <functional>

namespace gammasg {

// Worker count: min(hardware_concurrency, GAMMASG_THREADS) with a floor of 1.
// GAMMASG_THREADS is read once, at first use.
unsigned thread_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks across
// thread_count() workers; results written by index stay deterministic
// regardless of the worker count. Exceptions from workers are rethrown
// (first one wins). Falls back to a plain loop when n is small or only one
// worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gammasg
