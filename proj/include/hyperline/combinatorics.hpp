#pragma once

#include <cstdint>

namespace hyperline {

// Exact C(n, r) in 64 bits. Returns 0 for r < 0 or r > n; throws ResourceError
// when the value does not fit below 2^62.
std::uint64_t binomial(std::int64_t n, std::int64_t r);

// Overflow-checked helpers; both throw ResourceError past 2^62.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace hyperline
