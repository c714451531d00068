#pragma once

#include <cstddef>
#include <functional>

namespace pretend {

// Number of hardware threads, at least 1.
unsigned default_jobs();

// Calls body(i) once for every i in [0, count) on up to `jobs` threads
// (0 means default_jobs()). Callers write into per-index slots, so results do
// not depend on scheduling. The first exception thrown by any call is
// rethrown after all threads have joined.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace pretend
