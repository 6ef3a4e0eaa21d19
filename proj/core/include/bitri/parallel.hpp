#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace bitri {

// Worker count used by the parallel loops below; 1 means run inline.
void set_threads(unsigned n);
unsigned threads();

// Runs body(i) for i in [0, n). Bodies write into per-index slots, so the
// result never depends on the worker count. If several bodies throw, the
// exception of the lowest index wins.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bitri
