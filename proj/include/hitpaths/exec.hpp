#pragma once

#include <atomic>

namespace hitpaths {

// Selects between the plain serial kernel and its OpenMP counterpart. Both
// return identical results; the serial one is kept as the reference.
enum class Exec { Serial, Parallel };

// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
void set_threads(int n);

// Lowers `target` to `value` if smaller. Used for first-success reductions.
template <typename T>
void atomic_min(std::atomic<T>& target, T value) {
    T cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

}  // namespace hitpaths
