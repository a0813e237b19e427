#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kpieri {

/// Exact integer coefficient. Every ring operation goes through the checked
/// helpers below; overflow raises instead of wrapping.
using Coeff = std::int64_t;

class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Raised when an internal invariant breaks (non-exact division, runaway
/// basis expansion). Distinct from bad user input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient multiplication");
  return r;
}

inline Coeff checked_neg(Coeff a) { return checked_sub(0, a); }

/// binom(n, k), zero unless 0 <= k <= n.
inline Coeff binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  Coeff r = 1;
  for (long i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

inline int sign_of_parity(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace kpieri
