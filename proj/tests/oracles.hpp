// Brute-force references used only by the tests. None of these touch the
// Apéry tables, the coin-counting DP or the reduction code they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

/// Reachability table of <gens> on [0, limit].
inline std::vector<char> reachable(const std::vector<i64>& gens, i64 limit) {
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  in[0] = 1;
  for (i64 x = 1; x <= limit; ++x) {
    for (i64 g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return in;
}

inline bool member(const std::vector<i64>& gens, i64 n) {
  if (n < 0) return false;
  return reachable(gens, n)[static_cast<std::size_t>(n)] != 0;
}

/// Frobenius number by scanning upward until min(gens) consecutive members
/// appear, never beyond the product of the generators.
inline i64 frobenius(const std::vector<i64>& gens) {
  const i64 m = *std::min_element(gens.begin(), gens.end());
  i64 product = 1;
  for (i64 g : gens) product *= g;
  const i64 limit = product + m;
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  in[0] = 1;
  i64 last_gap = -1;
  i64 run = 1;
  for (i64 x = 1; x <= limit && run < m; ++x) {
    for (i64 g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
    if (in[static_cast<std::size_t>(x)]) {
      ++run;
    } else {
      last_gap = x;
      run = 0;
    }
  }
  return last_gap;
}

/// Number of (e0..e3) with sum e_i w_i = k, by nested loops.
inline i64 denumerant4(const std::vector<i64>& w, i64 k) {
  if (k < 0) return 0;
  i64 count = 0;
  for (i64 e0 = 0; e0 * w[0] <= k; ++e0) {
    for (i64 e1 = 0; e0 * w[0] + e1 * w[1] <= k; ++e1) {
      for (i64 e2 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] <= k; ++e2) {
        const i64 rest = k - e0 * w[0] - e1 * w[1] - e2 * w[2];
        if (rest % w[3] == 0) ++count;
      }
    }
  }
  return count;
}

inline i64 lcm(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

}  // namespace oracle
