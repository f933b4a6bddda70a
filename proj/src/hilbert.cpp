#include "pbrat/hilbert.hpp"

#include <vector>

namespace pbrat {

// Largest k for which the coin-counting table is allocated.
static constexpr Int kMaxDenumerantDegree = Int{1} << 26;

Int denumerant(std::span<const Int> weights, Int k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (k > kMaxDenumerantDegree) {
    throw Error(ErrorKind::Overflow, "denumerant degree " + to_string(k) + " exceeds table limit");
  }
  const auto n = static_cast<std::size_t>(k);
  std::vector<Int> ways(n + 1, 0);
  ways[0] = 1;
  for (Int w : weights) {
    if (w < 1) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
    if (w > k) continue;
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t j = step; j <= n; ++j) ways[j] = checked_add(ways[j], ways[j - step]);
  }
  return ways[n];
}

HilbertProfile hilbert_profile(const Quad& weights, Int degree, Int k) {
  HilbertProfile p{weights, degree, k, 0, 0, 0};
  p.dim_S_k = denumerant(weights, k);
  p.dim_S_k_minus_d = denumerant(weights, checked_sub(k, degree));
  p.dim_A_k = p.dim_S_k - p.dim_S_k_minus_d;
  return p;
}

Int h_zero(const WeightSystem& ws, Int k) { return hilbert_profile(ws.w, ws.degree, k).dim_A_k; }

Int h_top(const WeightSystem& ws, Int k) { return h_zero(ws, checked_sub(ws.alpha, k)); }

bool h2_is_zero(const ExponentTuple& t) {
  if (const unsigned c = cotype(t); c != 0) {
    throw Error(ErrorKind::NotCotypeZero, "cotype is " + std::to_string(c) + ", expected 0");
  }
  return h_top(weights_of(t), 0) == 0;
}

}  // namespace pbrat
