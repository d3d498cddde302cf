#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace multibraid
{

/// Hardware concurrency, capped by MULTIBRAID_THREADS when it is set.
std::size_t worker_count();

/// results[i] = f(i) for i in [0, n), computed by worker_count() threads.
/// Output order is the index order regardless of scheduling.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))>
{
  std::vector<decltype(f(std::size_t{}))> results(n);
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1)
  {
    for (std::size_t i = 0; i < n; ++i)
      results[i] = f(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;)
      {
        try
        {
          results[i] = f(i);
        }
        catch (...)
        {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return results;
}

} // namespace multibraid
