#ifndef SPEXLAB_PARALLEL_HPP
#define SPEXLAB_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace spexlab {

/// Run fn(i) for i in [0, count) on up to `jobs` threads. Work items must be
/// independent; callers keep determinism by writing into per-index slots.
template <typename Fn>
void parallel_for(int jobs, size_t count, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> threads;
  int nthreads = std::min<size_t>(jobs, count);
  threads.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

}  // namespace spexlab

#endif  // SPEXLAB_PARALLEL_HPP
