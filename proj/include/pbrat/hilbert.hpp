#pragma once

#include <span>

#include "pbrat/tuples.hpp"

namespace pbrat {

/// Graded pieces of S = C[X_0..X_3] (deg X_i = w_i) and A = S/(f), deg f = d.
struct HilbertProfile {
  Quad weights;
  Int degree = 0;
  Int k = 0;
  Int dim_S_k = 0;
  Int dim_S_k_minus_d = 0;
  Int dim_A_k = 0;
};

/// Number of exponent vectors e with sum e_i * w_i = k; 0 for k < 0.
Int denumerant(std::span<const Int> weights, Int k);

/// dim A_k = dim S_k - dim S_{k-d}.
HilbertProfile hilbert_profile(const Quad& weights, Int degree, Int k);

/// h^0(X, O_X(k)) = dim A_k.
Int h_zero(const WeightSystem& ws, Int k);
/// h^i(X, O_X(k)) for 1 <= i < dim X; always 0 for quasismooth hypersurfaces.
constexpr Int h_middle(const WeightSystem&, Int) noexcept { return 0; }
/// h^2(X, O_X(k)) = dim A_{alpha - k} for the surface X.
Int h_top(const WeightSystem& ws, Int k);

/// h^2(X, O_X) == 0 for X = Proj B_t. Throws NotCotypeZero when cotype(t) != 0.
bool h2_is_zero(const ExponentTuple& t);

}  // namespace pbrat
