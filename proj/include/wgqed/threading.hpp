#pragma once

#include <cstddef>
#include <functional>

namespace wgqed {

// Global worker cap for parallel_for. n <= 0 restores the hardware default.
void set_thread_cap(int n);
int thread_cap();

// Runs f over [0, n) in contiguous chunks. f(begin, end) must only write
// state owned by its index range, so output content never depends on the
// thread count or scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& f);

}  // namespace wgqed
