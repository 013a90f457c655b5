#pragma once

#include <atomic>
#include <cstdlib>
#include <memory>
#include <thread>
#include <vector>

namespace localh {

/// Worker count: the LOCALH_JOBS environment variable when set to a
/// positive integer, otherwise the hardware concurrency.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("LOCALH_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Applies fn to 0..count-1 across jobs workers; the result vector is in
/// index order regardless of completion order, so output built from it is
/// deterministic. Results go through a plain array buffer, never a
/// std::vector<R> written concurrently: vector<bool> packs bits and
/// neighboring indices would race on the same byte.
template <typename R, typename F>
std::vector<R> parallel_map_ordered(std::size_t count, F fn, unsigned jobs) {
  std::vector<R> results;
  if (count == 0) return results;
  std::unique_ptr<R[]> buf(new R[count]());
  if (jobs <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) buf[i] = fn(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        buf[i] = fn(i);
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(
        std::min<std::size_t>(jobs, count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  results.reserve(count);
  for (std::size_t i = 0; i < count; ++i) results.push_back(std::move(buf[i]));
  return results;
}

template <typename R, typename F>
std::vector<R> parallel_map_ordered(std::size_t count, F fn) {
  return parallel_map_ordered<R>(count, fn, default_jobs());
}

}  // namespace localh
