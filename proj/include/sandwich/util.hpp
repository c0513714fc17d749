#pragma once

#include <cstdint>
#include <functional>

namespace sandwich {

/// base^exp in exact 64-bit arithmetic; throws std::overflow_error on wrap.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Exact integer n-th root: returns r with r^n == value, or throws
/// std::invalid_argument if value is not a perfect n-th power.
std::uint64_t exact_nth_root(std::uint64_t value, unsigned n);

/// Runs fn(0), ..., fn(count-1), splitting the indices across up to `jobs`
/// worker threads. jobs <= 1 runs inline on the calling thread. The first
/// exception raised by any item is rethrown after all workers join.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace sandwich
