#pragma once

// Deterministic parallel search: the smallest index satisfying a predicate,
// independent of thread count and scheduling. Internal to the library.

#include <atomic>
#include <cstdint>
#include <optional>

namespace hyperline::detail {

template <typename Pred>
std::optional<std::int64_t> parallel_first(std::int64_t count, Pred&& pred) {
  std::atomic<std::int64_t> best{count};
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::int64_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

template <typename Pred>
std::optional<std::int64_t> serial_first(std::int64_t count, Pred&& pred) {
  for (std::int64_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

}  // namespace hyperline::detail
