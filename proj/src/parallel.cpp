#include "szego/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace szego {

namespace {
std::atomic<int> g_max_workers{0};
}

void set_max_workers(int n) { g_max_workers.store(n < 0 ? 0 : n); }

int max_workers() {
  int n = g_max_workers.load();
  if (n == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    n = hw == 0 ? 1 : int(hw);
  }
  return n;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t count = end > begin ? end - begin : 0;
  int workers = max_workers();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  if (std::size_t(workers) > count) workers = int(count);
  std::atomic<std::size_t> next{begin};
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= end) break;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace szego
