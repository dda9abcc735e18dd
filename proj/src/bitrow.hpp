#pragma once

// Word-level helpers over adjacency bit rows. Internal to the library.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperline::detail {

using Bits = std::vector<std::uint64_t>;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline void set_bit(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void clear_bit(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline bool test_bit(std::span<const std::uint64_t> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1u;
}

inline std::size_t count(std::span<const std::uint64_t> row) {
  std::size_t c = 0;
  for (auto w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const std::uint64_t> a,
                             std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return c;
}

inline bool any(std::span<const std::uint64_t> row) {
  for (auto w : row) {
    if (w != 0) return true;
  }
  return false;
}

// Calls f(i) for each set bit in ascending order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      f(w * 64 + static_cast<std::size_t>(b));
      word &= word - 1;
    }
  }
}

}  // namespace hyperline::detail
