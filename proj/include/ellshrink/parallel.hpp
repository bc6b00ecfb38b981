#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ellshrink {

/// Run fn(i) for i in [begin, end) on `workers` threads. Iterations must
/// write only to their own slots; the first exception (lowest index) is
/// rethrown after all threads join.
inline void parallel_for(std::size_t begin, std::size_t end, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
  if (end <= begin) {
    return;
  }
  const std::size_t count = end - begin;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
  }
  if (workers <= 1 || count == 1) {
    for (std::size_t i = begin; i < end; ++i) {
      fn(i);
    }
    return;
  }

  struct Failure {
    std::size_t index;
    std::exception_ptr error;
  };
  std::vector<std::vector<Failure>> failures(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      for (std::size_t i = begin + w; i < end; i += workers) {
        try {
          fn(i);
        } catch (...) {
          failures[w].push_back({i, std::current_exception()});
          return;
        }
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }

  const Failure* first = nullptr;
  for (const auto& list : failures) {
    for (const auto& f : list) {
      if (first == nullptr || f.index < first->index) {
        first = &f;
      }
    }
  }
  if (first != nullptr) {
    std::rethrow_exception(first->error);
  }
}

}  // namespace ellshrink
