#include "nsmooth/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace nsmooth {

int thread_count() {
  if (const char* env = std::getenv("NEWTON_SMOOTHING_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t workers = static_cast<std::size_t>(thread_count());
  if (workers <= 1 || n == 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  if (workers > n) workers = n;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([w, workers, n, &fn] {
      for (std::size_t k = w; k < n; k += workers) fn(k);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace nsmooth
