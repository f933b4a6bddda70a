#include "pbrat/param.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pbrat {

namespace {

Complex ipow(Complex z, Int e) {
  Complex acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

void require_coprime(Int a, Int c) {
  if (a < 1 || c < 1) throw Error(ErrorKind::InvalidArgument, "exponents must be positive");
  if (gcd(a, c) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + to_string(a) + ", " + to_string(c) + ") != 1");
  }
}

}  // namespace

Complex solve_u(const ParamSample& s) {
  require_coprime(s.a, s.c);
  Complex num{1.0, 0.0};
  for (const Complex& vj : s.v) num += ipow(vj, s.c);
  Complex den{1.0, 0.0};
  for (const Complex& ti : s.t) den += ipow(ti, s.a);
  if (std::abs(den) <= kDenominatorFloor) {
    throw Error(ErrorKind::DegenerateDenominator, "sum of t_i^a + 1 vanishes");
  }
  return -num / den;
}

double verify_on_hypersurface(const ParamSample& s) {
  const Complex u = solve_u(s);
  const Complex xk = std::pow(u * ipow(s.r, s.c), 1.0 / static_cast<double>(s.a));

  double largest = 0.0;
  Complex f{0.0, 0.0};
  const auto add = [&](Complex monomial) {
    largest = std::max(largest, std::abs(monomial));
    f += monomial;
  };
  for (const Complex& ti : s.t) add(ipow(ti * xk, s.a));
  add(ipow(xk, s.a));
  for (const Complex& vj : s.v) add(ipow(vj * s.r, s.c));
  add(ipow(s.r, s.c));
  return largest == 0.0 ? 0.0 : std::abs(f) / largest;
}

template <class Rng>
ParamSample random_sample(Int a, Int c, std::size_t k, std::size_t l, Rng& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const auto unit = [&] { return std::polar(1.0, phase(rng)); };
  ParamSample s;
  s.a = a;
  s.c = c;
  s.t.resize(k - 1);
  s.v.resize(l - 1);
  std::generate(s.t.begin(), s.t.end(), unit);
  std::generate(s.v.begin(), s.v.end(), unit);
  s.r = unit();
  return s;
}

template ParamSample random_sample<std::mt19937_64>(Int, Int, std::size_t, std::size_t, std::mt19937_64&);

ParamCheckReport check_parametrization(Int a, Int c, std::size_t samples, std::uint64_t seed, double tol,
                                       std::size_t k, std::size_t l) {
  require_coprime(a, c);
  if (k < 1 || l < 1) throw Error(ErrorKind::InvalidArgument, "k and l must be at least 1");
  ParamCheckReport rep{a, c, k, l, samples, seed, tol, 0.0, 0, false};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    for (;;) {
      ParamSample s = random_sample(a, c, k, l, rng);
      try {
        rep.max_residual = std::max(rep.max_residual, verify_on_hypersurface(s));
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateDenominator) throw;
        ++rep.redrawn;
      }
    }
  }
  rep.passed = rep.max_residual < tol;
  return rep;
}

}  // namespace pbrat
