#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hardimer {

/// Worker threads used by the parallel routines. Results never depend on it.
unsigned thread_count() noexcept;
/// 0 selects std::thread::hardware_concurrency().
void set_thread_count(unsigned n) noexcept;

/// Runs body(i) for i in [0, n) on up to thread_count() threads with static
/// striping. The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hardimer
