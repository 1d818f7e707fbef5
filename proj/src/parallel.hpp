#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace stadion::detail {

// Static split of [0, n) into contiguous slices, one per thread. fn(begin, end)
// must only write to its own slice.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(std::size_t(std::max(threads, 1)), n));
  if (t <= 1) {
    fn(std::size_t(0), n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (n + t - 1) / t;
  for (std::size_t b = 0; b < n; b += step) pool.emplace_back([&fn, b, e = std::min(n, b + step)] { fn(b, e); });
  for (auto& th : pool) th.join();
}

}  // namespace stadion::detail
