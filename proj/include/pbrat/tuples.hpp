#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pbrat/arith.hpp"

namespace pbrat {

using Quad = std::array<Int, 4>;

/// Pham–Brieskorn exponents (a_0, ..., a_3), stored ascending.
class ExponentTuple {
 public:
  /// Sorts the entries; throws InvalidArgument on a non-positive entry.
  explicit ExponentTuple(Quad a);

  const Quad& values() const noexcept { return a_; }
  Int operator[](std::size_t i) const noexcept { return a_[i]; }

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  Quad a_;
};

/// Weights of a hypersurface of degree n*L in P(w_0, ..., w_3).
struct WeightSystem {
  Quad w;          // ascending
  Int L = 1;       // lcm(w)
  Int degree = 1;  // n * L
  Int n = 1;
  Int alpha = 0;   // degree - sum(w)
  Int e = 1;       // gcd(w), the saturation index

  /// Sorts the weights and derives L, n, alpha, e. Throws InvalidArgument when
  /// a weight is non-positive or the degree is not a positive multiple of L.
  static WeightSystem make(Quad weights, Int degree);

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

/// Every sub-tuple obtained by deleting one entry has gcd 1.
bool is_well_formed(std::span<const Int> t);

/// Number of indices i with lcm(t without t_i) != lcm(t).
unsigned cotype(std::span<const Int> t);
inline unsigned cotype(const ExponentTuple& t) { return cotype(t.values()); }

/// w_i = lcm(a) / a_i, degree lcm(a).
WeightSystem weights_of(const ExponentTuple& t);

/// Applies a_i <- gcd(a_i, lcm(a_j : j != i)) in the given index order,
/// repeating full passes until one makes no change. When `trace` is non-null
/// it receives the input followed by the tuple after every effective update.
std::vector<Int> reduce_sequence(std::vector<Int> a, std::span<const std::size_t> order,
                                 std::vector<std::vector<Int>>* trace = nullptr);

struct Reduction {
  ExponentTuple result;
  std::vector<std::vector<Int>> trace;
};

/// Cotype-0 reduction in index order 0..3. The result is componentwise
/// bounded by the (sorted) input.
Reduction reduce_to_cotype0(const ExponentTuple& t);

/// Checks by enumeration that m*a + n*c = a*c forces m = 0 or n = 0.
/// Throws NotCoprime when gcd(a, c) != 1.
bool pure_axis_split(Int a, Int c);

/// a_0 = a_1, a_2 = a_3 and gcd(a_0, a_2) = 1 on an ascending quadruple.
bool is_paired_coprime(const Quad& sorted);

}  // namespace pbrat
