#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbrat/tuples.hpp"

namespace pbrat {

enum class Check {
  TheoremA_i,      // N >= max(2L - sum d, 0) implies N in <d>
  TheoremA_ii,     // nL - sum d in N \ <d> forces n = 1 and a paired tuple
  Lemma_gkl,       // gcd(d_k, d_l) | L / lcm(d_i, d_j)
  Lemma_fg,        // L/(d1 d2 d3) = f/g: g = g12 g13 g23 and g | L/d4
  Brauer,          // F(d1,d2,d3) <= lcm(d1,d2) + lcm(d1,d3) - d1 - d2 - d3
  Equivalence_h2,  // h^2 = 0 <=> classify_pb rational, on cotype-0 tuples
};

std::string_view to_string(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name) noexcept;

struct SweepConfig {
  Int max_entry = 30;
  std::vector<Int> n_range{1, 2, 3};
  std::vector<Check> checks;
  unsigned workers = 1;

  /// Throws InvalidArgument when max_entry < 2, checks is empty or an n is
  /// non-positive.
  void validate() const;
};

struct Violation {
  Quad tuple;
  std::string check;
  std::string detail;

  friend auto operator<=>(const Violation&, const Violation&) = default;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t tuples_scanned = 0;
  std::map<Check, std::uint64_t> checks_run;
  std::vector<Violation> violations;
  std::chrono::microseconds elapsed{0};

  bool passed() const noexcept { return violations.empty(); }
};

// Single-tuple checks. The tuple need not be sorted. Each throws NotWellFormed
// unless noted.
bool check_theorem_a_i(const Quad& t);
bool check_theorem_a_ii(const Quad& t, Int n);
bool check_lemma_gkl(const Quad& t);
bool check_lemma_fg(const Quad& t);
bool check_brauer(const Quad& t);
/// Throws NotCotypeZero when cotype(t) != 0.
bool check_equivalence(const Quad& t);

/// Enumerates ascending 4-tuples with entries <= max_entry, runs every
/// selected check on the tuples in its domain (well-formed tuples, or cotype-0
/// tuples for Equivalence_h2) and returns violations in lexicographic order.
SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace pbrat
