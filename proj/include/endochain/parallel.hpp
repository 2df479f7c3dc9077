#ifndef ENDOCHAIN_PARALLEL_HPP_
#define ENDOCHAIN_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace endochain {

  //! Evaluates f(0), ..., f(count - 1) on up to `jobs` threads and returns
  //! the results in index order, whatever the completion order was.  The
  //! first exception thrown by any task is rethrown on the calling thread.
  template <class R, class F>
  std::vector<R> parallel_map(std::size_t count, std::size_t jobs, F&& f) {
    std::vector<std::optional<R>> slots(count);
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    if (jobs == 1) {
      for (std::size_t i = 0; i < count; ++i) {
        slots[i].emplace(f(i));
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr       failure;
      std::mutex               failure_mutex;
      auto                     worker = [&] {
        while (true) {
          std::size_t const i = next.fetch_add(1);
          if (i >= count) {
            return;
          }
          try {
            slots[i].emplace(f(i));
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
            next.store(count);
          }
        }
      };
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (std::size_t j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
      if (failure) {
        std::rethrow_exception(failure);
      }
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) {
      out.push_back(std::move(*s));
    }
    return out;
  }

}  // namespace endochain

#endif  // ENDOCHAIN_PARALLEL_HPP_
