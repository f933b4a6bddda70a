#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pbrat/error.hpp"

namespace pbrat {

/// 128-bit signed integer used for every exact quantity in the library.
using Int = __int128;

inline constexpr Int kIntMax =
    static_cast<Int>((static_cast<unsigned __int128>(1) << 127) - 1);

// Overflow-checked primitives. Each throws Error{Overflow} instead of
// wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b) noexcept;
Int lcm(Int a, Int b);

/// gcd of a nonempty sequence of positive integers.
Int gcd_all(std::span<const Int> xs);
/// lcm of a nonempty sequence of positive integers; throws Overflow when the
/// result does not fit.
Int lcm_all(std::span<const Int> xs);

bool is_prime(Int p) noexcept;

/// Exponent of the prime `p` in `n`. Throws NotPrime when `p` is not prime.
unsigned valuation(Int p, Int n);

std::string to_string(Int v);
/// Parses an optionally signed decimal integer. Returns nullopt on malformed
/// input or when the value is outside the 128-bit range.
std::optional<Int> parse_int(std::string_view text) noexcept;

/// Strictly positive integer.
class PosInt {
 public:
  explicit PosInt(Int v) : v_(v) {
    if (v < 1) throw Error(ErrorKind::InvalidArgument, "expected a positive integer, got " + to_string(v));
  }

  Int value() const noexcept { return v_; }

  friend PosInt operator+(PosInt a, PosInt b) { return PosInt(checked_add(a.v_, b.v_)); }
  friend PosInt operator*(PosInt a, PosInt b) { return PosInt(checked_mul(a.v_, b.v_)); }
  friend bool operator==(PosInt, PosInt) = default;
  friend auto operator<=>(PosInt, PosInt) = default;

 private:
  Int v_;
};

/// Positive fraction in lowest terms.
struct ReducedFraction {
  PosInt numerator;
  PosInt denominator;

  static ReducedFraction make(Int num, Int den);
};

}  // namespace pbrat
