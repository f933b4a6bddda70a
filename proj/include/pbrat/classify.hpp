#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pbrat/tuples.hpp"

namespace pbrat {

enum class Verdict { Rational, NotRational };

enum class Criterion {
  PairedCoprime,         // n = 1, w_0 = w_1, w_2 = w_3, gcd(w_0, w_2) = 1
  NegativeAmplitude,     // alpha < 0
  AmplitudeInSemigroup,  // alpha in <w_0, ..., w_3>
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Criterion c) noexcept;

struct ClassificationReport {
  /// Present for Pham–Brieskorn inputs: the sorted input exponents and their
  /// cotype-0 reduction.
  std::optional<ExponentTuple> input;
  std::optional<ExponentTuple> reduced;
  WeightSystem weights;
  Verdict verdict = Verdict::NotRational;
  Criterion criterion = Criterion::AmplitudeInSemigroup;
  bool ample_canonical = false;
  bool rational_singularity_at_origin = false;
  Int alpha = 0;
  /// Coefficients of alpha over weights.w when the verdict is NotRational.
  std::optional<std::vector<Int>> witness;
};

/// Decides rationality of a well-formed quasismooth hypersurface of degree
/// n*L in P(w). Throws NotWellFormed when the weights are not well-formed.
ClassificationReport classify_hypersurface(const WeightSystem& ws);

/// Rationality of Spec and Proj of B_{a_0,...,a_3}, via the cotype-0 reduction.
ClassificationReport classify_pb(const ExponentTuple& t);

/// Rational with ample canonical divisor: clause (i) plus L > 2 w_0 + 2 w_2.
/// Throws NotWellFormed like classify_hypersurface.
bool classify_ample(const WeightSystem& ws);

/// All (a, c) with 2 <= a <= c <= max, gcd(a, c) = 1 and ac - 2a - 2c > 0,
/// ordered by (a, c).
std::vector<std::pair<Int, Int>> enumerate_ample_pairs(Int max);

}  // namespace pbrat
