#include "hyperglass/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hyperglass {

namespace {
std::size_t g_thread_override = 0;

std::size_t resolve_threads() {
  if (g_thread_override > 0) return g_thread_override;
  if (const char* env = std::getenv("HYPERGLASS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), 256);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}
}  // namespace

void set_thread_count(std::size_t n) { g_thread_override = n; }

std::size_t thread_count() { return resolve_threads(); }

void parallel_rows(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(resolve_threads(), n == 0 ? std::size_t{1} : n);
  if (workers <= 1 || n <= 1) {
    for (std::size_t j = 0; j < n; ++j) fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t j = next.fetch_add(1);
        if (j >= n) return;
        fn(j);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hyperglass
