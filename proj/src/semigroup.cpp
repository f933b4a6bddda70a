#include "pbrat/semigroup.hpp"

#include <algorithm>
#include <array>

namespace pbrat {

namespace {

constexpr Int kUnreached = -1;

// Round-robin relaxation over residues modulo gens[0]. For each further
// generator g the residues split into gcd(m, g) cycles under r -> r + g; each
// cycle is walked once starting from its current minimum, which leaves every
// entry at the least element reachable with the generators seen so far.
AperyTable build_apery(std::span<const Int> gens) {
  const Int m = gens.front();
  if (m > kMaxAperyModulus) {
    throw Error(ErrorKind::Overflow,
                "Apery table modulus " + to_string(m) + " exceeds limit " + to_string(kMaxAperyModulus));
  }
  const auto size = static_cast<std::size_t>(m);
  AperyTable table{m, std::vector<Int>(size, kUnreached)};
  auto& n = table.entries;
  n[0] = 0;

  for (std::size_t i = 1; i < gens.size(); ++i) {
    const Int g = gens[i];
    const Int d = gcd(m, g);
    const Int cycle = m / d;
    for (Int p = 0; p < d; ++p) {
      Int best = kUnreached;
      for (Int q = p; q < m; q += d) {
        const Int v = n[static_cast<std::size_t>(q)];
        if (v != kUnreached && (best == kUnreached || v < best)) best = v;
      }
      if (best == kUnreached) continue;
      Int cur = best;
      for (Int j = 1; j < cycle; ++j) {
        cur = checked_add(cur, g);
        auto& slot = n[static_cast<std::size_t>(cur % m)];
        if (slot != kUnreached && slot < cur) cur = slot;
        slot = cur;
      }
    }
  }
  return table;
}

bool member_saturated(const AperyTable& t, Int n) {
  if (n < 0) return false;
  const Int e = t.entries[static_cast<std::size_t>(n % t.modulus)];
  return e != kUnreached && n >= e;
}

}  // namespace

SemigroupSpec::SemigroupSpec(std::vector<Int> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorKind::InvalidArgument, "semigroup needs at least one generator");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  g0_ = gcd_all(generators_);

  std::vector<Int> scaled(generators_.size());
  std::transform(generators_.begin(), generators_.end(), scaled.begin(), [&](Int x) { return x / g0_; });
  saturated_ = std::make_shared<const AperyTable>(build_apery(scaled));
}

AperyTable apery(const SemigroupSpec& spec) {
  if (!spec.is_numerical()) {
    throw Error(ErrorKind::NotNumerical, "generators have gcd " + to_string(spec.g0()));
  }
  return spec.saturated_apery();
}

bool membership(const SemigroupSpec& spec, Int n) {
  if (n < 0 || n % spec.g0() != 0) return false;
  return member_saturated(spec.saturated_apery(), n / spec.g0());
}

Int frobenius(const SemigroupSpec& spec) {
  const AperyTable& t = apery(spec);
  return *std::max_element(t.entries.begin(), t.entries.end()) - t.modulus;
}

std::optional<std::vector<Int>> representation(const SemigroupSpec& spec, Int n) {
  if (!membership(spec, n)) return std::nullopt;
  const AperyTable& t = spec.saturated_apery();
  const auto gens = spec.generators();
  const Int g0 = spec.g0();
  const Int scaled = n / g0;

  std::vector<Int> coeffs(gens.size(), 0);
  Int rest = t.entries[static_cast<std::size_t>(scaled % t.modulus)];
  coeffs[0] = (scaled - rest) / t.modulus;
  // Subtracting a generator from an Apéry element that stays in the
  // semigroup lands on another Apéry element, so this terminates.
  while (rest > 0) {
    bool stepped = false;
    for (std::size_t i = gens.size(); i-- > 0;) {
      const Int g = gens[i] / g0;
      if (g <= rest && member_saturated(t, rest - g)) {
        rest -= g;
        ++coeffs[i];
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("representation: Apery table inconsistent");
  }
  return coeffs;
}

bool two_gen_bound(Int d1, Int d2, Int n) {
  const Int bound = checked_sub(checked_sub(lcm(d1, d2), d1), d2);
  return n > bound && n % gcd(d1, d2) == 0;
}

Int brauer_bound(Int d1, Int d2, Int d3) {
  const std::array<Int, 3> ds{d1, d2, d3};
  if (gcd_all(ds) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + to_string(d1) + ", " + to_string(d2) + ", " + to_string(d3) + ") != 1");
  }
  Int r = checked_add(lcm(d1, d2), lcm(d1, d3));
  return checked_sub(r, checked_add(checked_add(d1, d2), d3));
}

}  // namespace pbrat
