#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rootpoly {

// All arithmetic in the library is exact. Coordinates, weights, counts and
// determinants are 64-bit; any overflow throws instead of wrapping.
using Int = std::int64_t;

struct structural_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer add overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer sub overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer mul overflow");
  return r;
}

inline Int pow2(int e) {
  if (e < 0 || e > 62) throw std::overflow_error("2^" + std::to_string(e) + " outside Int range");
  return Int{1} << e;
}

// Exact binomial coefficient, n small.
inline Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;  // divides exactly at every step
  }
  return r;
}

}  // namespace rootpoly
