#include "hyperline/combinatorics.hpp"

#include <numeric>

#include "hyperline/error.hpp"

namespace hyperline {

namespace {
constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out >= kLimit) {
    throw ResourceError("integer overflow guard tripped (value >= 2^62)");
  }
  return out;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  // Multiplicative form; each prefix product is itself a binomial, so the
  // division is exact. Divide by gcd first to keep intermediates small.
  std::uint64_t acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
    std::uint64_t den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(acc, den);
    acc /= g;
    den /= g;
    num /= den;  // den now divides num because acc*num/den is an integer and gcd(acc,den)=1
    acc = checked_mul(acc, num);
  }
  return acc;
}

}  // namespace hyperline
