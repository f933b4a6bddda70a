#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pbrat/arith.hpp"

namespace pbrat {

using Complex = std::complex<double>;

/// Affine coordinates for the Fermat hypersurface
///   X_1^a + ... + X_k^a + Y_1^c + ... + Y_l^c = 0,  deg X = c, deg Y = a,
/// with t_i = x_i / x_k, v_j = y_j / y_l and a scale r = y_l.
struct ParamSample {
  Int a = 1;
  Int c = 1;
  std::vector<Complex> t;  // k - 1 entries
  std::vector<Complex> v;  // l - 1 entries
  Complex r{1.0, 0.0};
};

inline constexpr double kDenominatorFloor = 1e-6;

/// u = x_k^a / y_l^c = -(sum v_j^c + 1) / (sum t_i^a + 1).
/// Throws NotCoprime, or DegenerateDenominator when |sum t_i^a + 1| <= 1e-6.
Complex solve_u(const ParamSample& s);

/// Builds the point y_l = r, y_j = v_j r, x_k = (u r^c)^(1/a) (principal
/// root), x_i = t_i x_k and returns |f(point)| divided by the largest
/// monomial magnitude.
double verify_on_hypersurface(const ParamSample& s);

/// Unit-modulus t, v and r with uniformly random phases.
template <class Rng>
ParamSample random_sample(Int a, Int c, std::size_t k, std::size_t l, Rng& rng);

struct ParamCheckReport {
  Int a = 0;
  Int c = 0;
  std::size_t k = 2;
  std::size_t l = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double max_residual = 0.0;
  std::size_t redrawn = 0;  // samples redrawn because of a degenerate denominator
  bool passed = false;
};

/// Checks `samples` seeded random points of the (a, c) Fermat family.
ParamCheckReport check_parametrization(Int a, Int c, std::size_t samples, std::uint64_t seed, double tol,
                                       std::size_t k = 2, std::size_t l = 2);

}  // namespace pbrat
