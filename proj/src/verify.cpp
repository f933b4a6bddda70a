#include "pbrat/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

#include "pbrat/classify.hpp"
#include "pbrat/hilbert.hpp"
#include "pbrat/semigroup.hpp"

namespace pbrat {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 6> kCheckNames{{
    {Check::TheoremA_i, "theorem_a_i"},
    {Check::TheoremA_ii, "theorem_a_ii"},
    {Check::Lemma_gkl, "lemma_gkl"},
    {Check::Lemma_fg, "lemma_fg"},
    {Check::Brauer, "brauer"},
    {Check::Equivalence_h2, "equivalence_h2"},
}};

using Failure = std::optional<std::string>;

std::string quad_str(const Quad& t) {
  return "(" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + "," + to_string(t[3]) + ")";
}

Int sum_of(const Quad& t) {
  Int s = 0;
  for (Int x : t) s = checked_add(s, x);
  return s;
}

Quad sorted(Quad t) {
  std::sort(t.begin(), t.end());
  return t;
}

void require_well_formed(const Quad& t) {
  for (Int x : t) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, "non-positive entry in " + quad_str(t));
  }
  if (!is_well_formed(t)) throw Error(ErrorKind::NotWellFormed, quad_str(t) + " is not well-formed");
}

SemigroupSpec semigroup_of(const Quad& t) { return SemigroupSpec(std::vector<Int>(t.begin(), t.end())); }

Failure theorem_a_i(const Quad& t, const SemigroupSpec& gamma) {
  const Int L = lcm_all(t);
  const Int start = std::max<Int>(checked_sub(checked_mul(2, L), sum_of(t)), 0);
  const Int step = *std::min_element(t.begin(), t.end());
  for (Int N = start; N < start + step; ++N) {
    if (!membership(gamma, N)) return "N=" + to_string(N) + " >= " + to_string(start) + " is not in the semigroup";
  }
  return std::nullopt;
}

Failure theorem_a_ii(const Quad& t, Int n, const SemigroupSpec& gamma) {
  const Int value = checked_sub(checked_mul(n, lcm_all(t)), sum_of(t));
  if (value < 0 || membership(gamma, value)) return std::nullopt;
  if (n == 1 && is_paired_coprime(sorted(t))) return std::nullopt;
  return "n=" + to_string(n) + ": nL - sum = " + to_string(value) + " is a gap but the tuple is not paired with n = 1";
}

Failure lemma_gkl(const Quad& t) {
  const Int L = lcm_all(t);
  static constexpr std::array<std::array<std::size_t, 4>, 6> kSplits{{
      {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}, {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}}};
  for (const auto& [i, j, k, l] : kSplits) {
    const Int gkl = gcd(t[k], t[l]);
    const Int quotient = L / lcm(t[i], t[j]);
    if (quotient % gkl != 0) {
      return "gcd(d" + std::to_string(k + 1) + ",d" + std::to_string(l + 1) + ")=" + to_string(gkl) +
             " does not divide L/L_" + std::to_string(i + 1) + std::to_string(j + 1) + "=" + to_string(quotient);
    }
  }
  return std::nullopt;
}

Failure lemma_fg(const Quad& unsorted) {
  const Quad d = sorted(unsorted);
  const Int L = lcm_all(d);
  const auto frac = ReducedFraction::make(L, checked_mul(checked_mul(d[0], d[1]), d[2]));
  const Int g = frac.denominator.value();
  const Int product = gcd(d[0], d[1]) * gcd(d[0], d[2]) * gcd(d[1], d[2]);
  const Int m = L / d[3];
  if (g != product) return "g=" + to_string(g) + " but g12*g13*g23=" + to_string(product);
  if (m % g != 0) return "g=" + to_string(g) + " does not divide m=" + to_string(m);
  return std::nullopt;
}

Failure brauer(const Quad& t) {
  for (std::size_t drop = 0; drop < 4; ++drop) {
    std::array<Int, 3> tri{};
    std::size_t w = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != drop) tri[w++] = t[i];
    }
    const Int F = frobenius(SemigroupSpec(std::vector<Int>(tri.begin(), tri.end())));
    for (std::size_t lead = 0; lead < 3; ++lead) {
      const Int bound = brauer_bound(tri[lead], tri[(lead + 1) % 3], tri[(lead + 2) % 3]);
      if (F > bound) {
        return "F(" + to_string(tri[0]) + "," + to_string(tri[1]) + "," + to_string(tri[2]) + ")=" + to_string(F) +
               " exceeds bound " + to_string(bound);
      }
    }
  }
  return std::nullopt;
}

Failure equivalence(const Quad& t) {
  const ExponentTuple e(t);
  const bool h2_zero = h2_is_zero(e);
  const ClassificationReport pb = classify_pb(e);
  const bool rational = pb.verdict == Verdict::Rational;
  if (h2_zero != rational) {
    return std::string("h2_is_zero=") + (h2_zero ? "true" : "false") + " but verdict " +
           std::string(to_string(pb.verdict));
  }
  const WeightSystem ws = weights_of(e);
  const ClassificationReport hyp = classify_hypersurface(ws);
  if (hyp.verdict != pb.verdict || hyp.criterion != pb.criterion) {
    return "hypersurface classifier disagrees: " + std::string(to_string(hyp.criterion)) + " vs " +
           std::string(to_string(pb.criterion));
  }
  if (ws.alpha >= 0) {
    const bool counted = denumerant(ws.w, ws.alpha) > 0;
    const bool member = membership(semigroup_of(ws.w), ws.alpha);
    if (counted != member) return "denumerant and semigroup membership disagree at alpha=" + to_string(ws.alpha);
  }
  return std::nullopt;
}

bool holds(const Failure& f) { return !f.has_value(); }

struct Partition {
  std::uint64_t scanned = 0;
  std::map<Check, std::uint64_t> runs;
  std::vector<Violation> violations;
};

bool wants(const SweepConfig& cfg, Check c) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end();
}

void sweep_tuple(const SweepConfig& cfg, const Quad& t, Partition& out) {
  bool touched = false;
  const auto record = [&](Check c, const Failure& f) {
    ++out.runs[c];
    if (f) out.violations.push_back(Violation{t, std::string(to_string(c)), *f});
  };
  const auto guarded = [&](const char* stage, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      out.violations.push_back(Violation{t, std::string(error_code(e.kind())), std::string(stage) + ": " + e.what()});
    } catch (const std::exception& e) {
      out.violations.push_back(Violation{t, "internal", std::string(stage) + ": " + e.what()});
    }
  };

  if (is_well_formed(t)) {
    const bool semigroup_checks =
        wants(cfg, Check::TheoremA_i) || wants(cfg, Check::TheoremA_ii);
    const bool any = semigroup_checks || wants(cfg, Check::Lemma_gkl) || wants(cfg, Check::Lemma_fg) ||
                     wants(cfg, Check::Brauer);
    if (any) {
      touched = true;
      guarded("well-formed checks", [&] {
        if (semigroup_checks) {
          const SemigroupSpec gamma = semigroup_of(t);
          if (wants(cfg, Check::TheoremA_i)) record(Check::TheoremA_i, theorem_a_i(t, gamma));
          if (wants(cfg, Check::TheoremA_ii)) {
            for (Int n : cfg.n_range) record(Check::TheoremA_ii, theorem_a_ii(t, n, gamma));
          }
        }
        if (wants(cfg, Check::Lemma_gkl)) record(Check::Lemma_gkl, lemma_gkl(t));
        if (wants(cfg, Check::Lemma_fg)) record(Check::Lemma_fg, lemma_fg(t));
        if (wants(cfg, Check::Brauer)) record(Check::Brauer, brauer(t));
      });
    }
  }
  if (wants(cfg, Check::Equivalence_h2) && cotype(t) == 0) {
    touched = true;
    guarded("equivalence", [&] { record(Check::Equivalence_h2, equivalence(t)); });
  }
  if (touched) ++out.scanned;
}

}  // namespace

std::string_view to_string(Check c) noexcept {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "unknown";
}

std::optional<Check> parse_check(std::string_view name) noexcept {
  for (const auto& [check, n] : kCheckNames) {
    if (n == name) return check;
  }
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (max_entry < 2) throw Error(ErrorKind::InvalidArgument, "max_entry must be at least 2");
  if (checks.empty()) throw Error(ErrorKind::InvalidArgument, "no checks selected");
  for (Int n : n_range) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n_range entries must be positive");
  }
}

bool check_theorem_a_i(const Quad& t) {
  require_well_formed(t);
  return holds(theorem_a_i(t, semigroup_of(t)));
}

bool check_theorem_a_ii(const Quad& t, Int n) {
  require_well_formed(t);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  return holds(theorem_a_ii(t, n, semigroup_of(t)));
}

bool check_lemma_gkl(const Quad& t) {
  require_well_formed(t);
  return holds(lemma_gkl(t));
}

bool check_lemma_fg(const Quad& t) {
  require_well_formed(t);
  return holds(lemma_fg(t));
}

bool check_brauer(const Quad& t) {
  require_well_formed(t);
  return holds(brauer(t));
}

bool check_equivalence(const Quad& t) { return holds(equivalence(t)); }

SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();

  const auto max = static_cast<std::size_t>(cfg.max_entry);
  std::vector<Partition> parts(max);
  std::atomic<std::size_t> next{0};

  // Partition p holds every ascending tuple whose leading entry is p + 1.
  const auto worker = [&] {
    for (std::size_t p = next.fetch_add(1); p < max; p = next.fetch_add(1)) {
      const Int a0 = static_cast<Int>(p) + 1;
      for (Int a1 = a0; a1 <= cfg.max_entry; ++a1) {
        for (Int a2 = a1; a2 <= cfg.max_entry; ++a2) {
          for (Int a3 = a2; a3 <= cfg.max_entry; ++a3) sweep_tuple(cfg, Quad{a0, a1, a2, a3}, parts[p]);
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(max)));
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  SweepReport report;
  report.config = cfg;
  for (Partition& part : parts) {
    report.tuples_scanned += part.scanned;
    for (const auto& [check, count] : part.runs) report.checks_run[check] += count;
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(report.violations));
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace pbrat
