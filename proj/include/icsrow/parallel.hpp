#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace icsrow {

// Runs independent tasks on up to `workers` threads; results keep task order,
// so output is identical for any worker count.
template <typename T>
std::vector<T> parallel_map(const std::vector<std::function<T()>>& tasks,
                            unsigned workers = 1) {
  std::vector<T> results(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
      results[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<size_t>(workers, tasks.size()); ++w)
    pool.emplace_back(run);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace icsrow
