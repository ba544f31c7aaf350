#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace wreathdet {

/// Number of worker threads: hardware concurrency, capped by the
/// WREATHDET_THREADS environment variable when it is set to a positive integer.
unsigned worker_count();

/// Runs task(i) for i in [0, count) on up to worker_count() threads and
/// returns the results indexed by i, so any reduction over them is
/// independent of scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& task);

namespace detail {
void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);
}

template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& task) {
  std::vector<T> results(count);
  detail::run_indexed(count, [&](std::size_t i) { results[i] = task(i); });
  return results;
}

}  // namespace wreathdet
