#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ratnet {

// Worker cap: ERZ_THREADS env var, else hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* s = std::getenv("ERZ_THREADS")) {
    long v = std::strtol(s, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

// Splits [0, n) into per-worker chunks and runs fn(chunk, begin, end) on each.
// Results must be merged by the caller in chunk order (or associatively), so
// the outcome does not depend on the number of workers.
template <class Fn>
void parallel_chunks(std::uint64_t n, Fn&& fn) {
  unsigned workers = worker_count();
  if (n < 4096 || workers == 1) {
    fn(0u, std::uint64_t{0}, n);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t step = n / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t b = w * step;
    const std::uint64_t e = (w + 1 == workers) ? n : b + step;
    threads.emplace_back([&fn, w, b, e] { fn(w, b, e); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace ratnet
