#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unbruijn {

/// Default cap on k^n for explicit graph construction.  Beyond this only
/// the closed-form calculators are usable.
inline constexpr std::uint64_t kDefaultGraphCap = std::uint64_t{1} << 26;

/// Default node budget for the brute-force cover search.
inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 27;

/// Raised when a size cap or search budget would be exceeded.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base^exp with overflow detection; never wraps silently.
inline std::uint64_t pow_checked(std::uint64_t base, unsigned exp) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > UINT64_MAX)
      throw std::overflow_error("integer overflow: " + std::to_string(base) +
                                "^" + std::to_string(exp) +
                                " exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a) throw std::overflow_error("integer overflow in addition");
  return s;
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw std::overflow_error("integer overflow in multiplication");
  return static_cast<std::uint64_t>(p);
}

/// base^exp in 128 bits, for counting formulas whose intermediates exceed
/// 64 bits while the final result still fits.
inline unsigned __int128 pow_u128(std::uint64_t base, unsigned exp) {
  constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > kMax / base)
      throw std::overflow_error("integer overflow: " + std::to_string(base) + "^" +
                                std::to_string(exp) + " exceeds 128-bit range");
    acc *= base;
  }
  return acc;
}

inline std::uint64_t narrow_checked(unsigned __int128 v) {
  if (v > UINT64_MAX) throw std::overflow_error("result exceeds 64-bit range");
  return static_cast<std::uint64_t>(v);
}

}  // namespace unbruijn
