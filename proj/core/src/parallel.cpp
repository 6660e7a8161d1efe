#include "prefnet/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace prefnet {

int default_jobs() {
  if (const char* env = std::getenv("PREFNET_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

namespace {

class ErrorSlot {
 public:
  void capture() {
    std::lock_guard lock(mu_);
    if (!err_) err_ = std::current_exception();
  }
  void rethrow() {
    if (err_) std::rethrow_exception(err_);
  }
 private:
  std::mutex mu_;
  std::exception_ptr err_;
};

}  // namespace

std::optional<std::size_t> parallel_first(std::size_t count, int jobs,
                                          const std::function<bool(std::size_t)>& pred) {
  jobs = resolve_jobs(jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const std::size_t block = std::max<std::size_t>(1, std::min<std::size_t>(64, count / (8 * jobs) + 1));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::atomic<bool> failed{false};
  ErrorSlot error;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t b = next.fetch_add(block);
        if (b >= count || b >= best.load() || failed.load()) return;
        const std::size_t e = std::min(count, b + block);
        for (std::size_t i = b; i < e; ++i) {
          if (i >= best.load()) return;
          if (pred(i)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      }
    } catch (...) {
      failed = true;
      error.capture();
    }
  };
  std::vector<std::thread> pool;
  const int n = static_cast<int>(std::min<std::size_t>(jobs, (count + block - 1) / block));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  error.rethrow();
  if (best.load() < count) return best.load();
  return std::nullopt;
}

void parallel_chunks(std::size_t count, int jobs,
                     const std::function<void(std::size_t, std::size_t, int)>& body) {
  jobs = resolve_jobs(jobs);
  if (jobs == 1 || count < 2) {
    body(0, count, 0);
    return;
  }
  const std::size_t n = std::min<std::size_t>(jobs, count);
  const std::size_t per = (count + n - 1) / n;
  ErrorSlot error;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t b = t * per, e = std::min(count, b + per);
    if (b >= e) break;
    pool.emplace_back([&, b, e, t] {
      try {
        body(b, e, static_cast<int>(t));
      } catch (...) {
        error.capture();
      }
    });
  }
  for (auto& t : pool) t.join();
  error.rethrow();
}

}  // namespace prefnet
