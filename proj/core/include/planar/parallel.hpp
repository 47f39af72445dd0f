// Copyright 2026 The planar-pentanomials Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLANAR_PARALLEL_HPP
#define PLANAR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace planar {

/// Options shared by every exhaustive sweep.
struct SweepOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Largest number of points an exhaustive sweep may visit (q^3 for
  /// sweeps over F_{q^3}, q^5 for sweeps over coefficient tuples); 0 means
  /// unbounded.
  std::uint64_t max_points = 0;
};

unsigned resolve_threads(unsigned requested) noexcept;

/// Throws kScaleExceeded when a sweep over `points` points is over the bound.
void check_scale(const SweepOptions& options, std::uint64_t points);

/// Smallest i in [begin, end) with pred(i) true, or nullopt.
///
/// `make_pred` is called once per worker and returns that worker's
/// predicate, so predicates may own scratch state. Work is handed out in
/// chunks; a worker stops once every index it could still claim lies above
/// the best hit so far. The answer does not depend on the thread count.
template <class MakePred>
std::optional<std::uint64_t> find_first(std::uint64_t begin, std::uint64_t end,
                                        unsigned threads, MakePred make_pred) {
  if (begin >= end) return std::nullopt;
  const std::uint64_t total = end - begin;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(threads), total));
  const std::uint64_t chunk =
      std::clamp<std::uint64_t>(total / (std::uint64_t{threads} * 16), 1, 4096);

  std::atomic<std::uint64_t> next{begin};
  std::atomic<std::uint64_t> best{end};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      auto pred = make_pred();
      for (;;) {
        const std::uint64_t lo = next.fetch_add(chunk);
        if (lo >= end || lo >= best.load(std::memory_order_relaxed)) return;
        const std::uint64_t hi = std::min(end, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (i >= best.load(std::memory_order_relaxed)) break;
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(begin);
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  const std::uint64_t found = best.load();
  if (found == end) return std::nullopt;
  return found;
}

/// Calls body(i) for every i in [0, count), spread over worker threads.
/// `body` must only write to per-index storage.
template <class Body>
void parallel_for(std::uint64_t count, unsigned threads, Body body) {
  if (count == 0) return;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(threads), count));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::uint64_t i = next.fetch_add(1); i < count;
               i = next.fetch_add(1)) {
            body(i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace planar

#endif  // PLANAR_PARALLEL_HPP
