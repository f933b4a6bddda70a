#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pbrat/arith.hpp"

namespace pbrat {

/// Least element of the semigroup in every residue class modulo its smallest
/// generator.
struct AperyTable {
  Int modulus = 1;
  std::vector<Int> entries;
};

/// Largest modulus for which an Apéry table is built (entries are 16 bytes).
inline constexpr Int kMaxAperyModulus = Int{1} << 22;

/// The submonoid of (N, +) generated by a finite set of positive integers.
///
/// Generators are deduplicated and sorted on construction. The Apéry table of
/// the saturation <d_i / g0> is computed eagerly so every membership query is
/// O(1); the object is immutable afterwards and cheap to copy.
class SemigroupSpec {
 public:
  explicit SemigroupSpec(std::vector<Int> generators);

  std::span<const Int> generators() const noexcept { return generators_; }
  /// gcd of the generators; the semigroup is numerical iff this is 1.
  Int g0() const noexcept { return g0_; }
  bool is_numerical() const noexcept { return g0_ == 1; }

  /// Apéry table of the saturated semigroup <d_i / g0>.
  const AperyTable& saturated_apery() const noexcept { return *saturated_; }

 private:
  std::vector<Int> generators_;
  Int g0_;
  std::shared_ptr<const AperyTable> saturated_;
};

/// Computes the Apéry table of a numerical semigroup. Throws NotNumerical when
/// gcd(generators) != 1.
AperyTable apery(const SemigroupSpec& spec);

/// True iff n is a nonnegative integer combination of the generators.
bool membership(const SemigroupSpec& spec, Int n);

/// Largest integer outside the semigroup; -1 when the semigroup is N.
/// Throws NotNumerical when gcd(generators) != 1.
Int frobenius(const SemigroupSpec& spec);

/// Nonnegative coefficients c with sum c_i * generators()[i] == n, or nullopt
/// when n is not in the semigroup.
std::optional<std::vector<Int>> representation(const SemigroupSpec& spec, Int n);

/// n > lcm(d1,d2) - d1 - d2 and gcd(d1,d2) | n. Sufficient for n in <d1,d2>.
bool two_gen_bound(Int d1, Int d2, Int n);

/// lcm(d1,d2) + lcm(d1,d3) - d1 - d2 - d3, an upper bound for F(d1,d2,d3).
/// Throws NotCoprime when gcd(d1,d2,d3) != 1.
Int brauer_bound(Int d1, Int d2, Int d3);

}  // namespace pbrat
