#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace rado::arith {

inline constexpr std::int64_t kSumLimit = std::int64_t{1} << 62;

/// a * b, or nullopt when the product exceeds kSumLimit.
inline std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > kSumLimit) return std::nullopt;
  return out;
}

inline std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out) || out > kSumLimit) return std::nullopt;
  return out;
}

/// v^degree for degree in {1, 2}; callers have already bounded v.
inline std::int64_t power(std::int64_t v, int degree) {
  return degree == 1 ? v : v * v;
}

/// floor(sqrt(x)) for x >= 0, exact for the whole int64 range.
inline std::int64_t isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<__int128>(r) * r > x) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// The positive v with coefficient * v^degree == value, if any.
inline std::optional<std::int64_t> exact_root(std::int64_t value,
                                              std::int64_t coefficient,
                                              int degree) {
  if (value <= 0 || value % coefficient != 0) return std::nullopt;
  const std::int64_t q = value / coefficient;
  if (degree == 1) return q;
  const std::int64_t r = isqrt(q);
  if (r * r != q) return std::nullopt;
  return r;
}

}  // namespace rado::arith
