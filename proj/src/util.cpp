#include "sandwich/util.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sandwich {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw std::overflow_error("checked_pow: 64-bit overflow computing " +
                                std::to_string(base) + "^" + std::to_string(exp));
    }
    result *= base;
  }
  return result;
}

std::uint64_t exact_nth_root(std::uint64_t value, unsigned n) {
  if (n == 0) throw std::invalid_argument("exact_nth_root: n must be positive");
  if (n == 1 || value <= 1) return value;
  auto guess = static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<double>(value), 1.0 / n)));
  for (std::uint64_t r = (guess > 2 ? guess - 2 : 0); r <= guess + 2; ++r) {
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < n && p <= value; ++i) p *= r;
    if (p == value) return r;
  }
  throw std::invalid_argument(std::to_string(value) + " is not a perfect " +
                              std::to_string(n) + "-th power");
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  if (jobs <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = std::min(jobs, count);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sandwich
