#pragma once

#include <cstddef>
#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace a5 {

/// Worker count used by parallel_map; 1 means run inline. Defaults to 1.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Evaluates fn(0..n-1) and returns the results in index order, so output is
/// independent of scheduling. The first exception (lowest index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  const unsigned workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  const std::size_t w = std::min<std::size_t>(workers, n);
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace a5
