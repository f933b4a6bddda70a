#include "pbrat/arith.hpp"

#include <algorithm>

namespace pbrat {

std::string_view error_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::NotPrime: return "not_prime";
    case ErrorKind::NotNumerical: return "not_numerical";
    case ErrorKind::NotCoprime: return "not_coprime";
    case ErrorKind::NotWellFormed: return "not_well_formed";
    case ErrorKind::NotCotypeZero: return "not_cotype_zero";
    case ErrorKind::DegenerateDenominator: return "degenerate_denominator";
    case ErrorKind::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

namespace {

[[noreturn]] void overflow(const char* op, Int a, Int b) {
  throw Error(ErrorKind::Overflow,
              std::string("128-bit overflow in ") + op + "(" + to_string(a) + ", " + to_string(b) + ")");
}

void require_positive(std::span<const Int> xs, const char* what) {
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": empty sequence");
  for (Int x : xs) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": non-positive entry " + to_string(x));
  }
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add", a, b);
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub", a, b);
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul", a, b);
  return r;
}

Int gcd(Int a, Int b) noexcept {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

Int gcd_all(std::span<const Int> xs) {
  require_positive(xs, "gcd_all");
  Int g = 0;
  for (Int x : xs) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

Int lcm_all(std::span<const Int> xs) {
  require_positive(xs, "lcm_all");
  Int l = 1;
  for (Int x : xs) l = lcm(l, x);
  return l;
}

bool is_prime(Int p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned valuation(Int p, Int n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "valuation of non-positive " + to_string(n));
  unsigned u = 0;
  while (n % p == 0) {
    n /= p;
    ++u;
  }
  return u;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Work in unsigned so that the minimum value does not overflow on negation.
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::optional<Int> parse_int(std::string_view text) noexcept {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return std::nullopt;
  Int v = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') return std::nullopt;
    const Int digit = ch - '0';
    if (__builtin_mul_overflow(v, Int{10}, &v)) return std::nullopt;
    if (neg ? __builtin_sub_overflow(v, digit, &v) : __builtin_add_overflow(v, digit, &v)) return std::nullopt;
  }
  return v;
}

ReducedFraction ReducedFraction::make(Int num, Int den) {
  if (num < 1 || den < 1) {
    throw Error(ErrorKind::InvalidArgument, "fraction terms must be positive");
  }
  const Int g = gcd(num, den);
  return ReducedFraction{PosInt(num / g), PosInt(den / g)};
}

}  // namespace pbrat
