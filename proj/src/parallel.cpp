#include "cardiac4d/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cardiac4d {

namespace {
std::atomic<int> g_threads{0};  // 0 = use hardware count
}

int hardware_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

int global_thread_count() {
  int n = g_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : hardware_thread_count();
}

void set_global_thread_count(int n) {
  g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

std::size_t chunk_count_for(std::size_t n, std::size_t chunk_size) {
  if (n == 0) return 0;
  return (n + chunk_size - 1) / chunk_size;
}

void parallel_chunks(std::size_t n, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t chunks = chunk_count_for(n, chunk_size);
  const int workers =
      static_cast<int>(std::min<std::size_t>(chunks, static_cast<std::size_t>(global_thread_count())));

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = c * chunk_size;
      fn(begin, std::min(n, begin + chunk_size), c);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      const std::size_t begin = c * chunk_size;
      try {
        fn(begin, std::min(n, begin + chunk_size), c);
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  parallel_chunks(n, 1, [&](std::size_t begin, std::size_t, std::size_t) { fn(begin); });
}

}  // namespace cardiac4d
