#include "pbrat/classify.hpp"

#include <stdexcept>

#include "pbrat/semigroup.hpp"

namespace pbrat {

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Rational ? "rational" : "not_rational";
}

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::PairedCoprime: return "paired_coprime";
    case Criterion::NegativeAmplitude: return "negative_amplitude";
    case Criterion::AmplitudeInSemigroup: return "amplitude_in_semigroup";
  }
  return "unknown";
}

namespace {

void require_well_formed(const WeightSystem& ws) {
  if (!is_well_formed(ws.w)) {
    throw Error(ErrorKind::NotWellFormed, "weights (" + to_string(ws.w[0]) + ", " + to_string(ws.w[1]) + ", " +
                                              to_string(ws.w[2]) + ", " + to_string(ws.w[3]) +
                                              ") are not well-formed");
  }
}

bool paired_clause(const WeightSystem& ws) { return ws.n == 1 && is_paired_coprime(ws.w); }

// Coefficients of alpha aligned with ws.w (repeated weights share the first
// slot).
std::vector<Int> amplitude_witness(const WeightSystem& ws) {
  const SemigroupSpec gamma(std::vector<Int>(ws.w.begin(), ws.w.end()));
  auto rep = representation(gamma, ws.alpha);
  if (!rep) {
    // Theorem A(ii) rules this out for well-formed weights.
    throw std::logic_error("amplitude " + to_string(ws.alpha) + " not in the weight semigroup");
  }
  std::vector<Int> coeffs(4, 0);
  const auto gens = gamma.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (ws.w[i] == gens[g]) {
        coeffs[i] = (*rep)[g];
        break;
      }
    }
  }
  return coeffs;
}

void fill_not_rational(ClassificationReport& r) {
  r.verdict = Verdict::NotRational;
  r.criterion = Criterion::AmplitudeInSemigroup;
  r.witness = amplitude_witness(r.weights);
}

}  // namespace

ClassificationReport classify_hypersurface(const WeightSystem& ws) {
  require_well_formed(ws);
  ClassificationReport r;
  r.weights = ws;
  r.alpha = ws.alpha;
  // The affine cone has a rational singularity iff its a-invariant is negative.
  r.rational_singularity_at_origin = ws.alpha < 0;
  if (paired_clause(ws)) {
    r.verdict = Verdict::Rational;
    r.criterion = Criterion::PairedCoprime;
  } else if (ws.alpha < 0) {
    r.verdict = Verdict::Rational;
    r.criterion = Criterion::NegativeAmplitude;
  } else {
    fill_not_rational(r);
  }
  r.ample_canonical = r.criterion == Criterion::PairedCoprime && ws.L > checked_mul(2, ws.w[0] + ws.w[2]);
  return r;
}

ClassificationReport classify_pb(const ExponentTuple& t) {
  const ExponentTuple reduced = reduce_to_cotype0(t).result;
  const WeightSystem ws = weights_of(reduced);
  require_well_formed(ws);

  ClassificationReport r;
  r.input = t;
  r.reduced = reduced;
  r.weights = ws;
  r.alpha = ws.alpha;

  // sum 1/b_i > 1 <=> sum(L'/b_i) > L' with L' = lcm(b).
  const auto reciprocal_sum_exceeds_one = [](const ExponentTuple& e) {
    const Int l = lcm_all(e.values());
    Int s = 0;
    for (Int x : e.values()) s = checked_add(s, l / x);
    return s > l;
  };

  r.rational_singularity_at_origin = reciprocal_sum_exceeds_one(t);
  if (is_paired_coprime(reduced.values())) {
    r.verdict = Verdict::Rational;
    r.criterion = Criterion::PairedCoprime;
  } else if (reciprocal_sum_exceeds_one(reduced)) {
    r.verdict = Verdict::Rational;
    r.criterion = Criterion::NegativeAmplitude;
  } else {
    fill_not_rational(r);
  }
  r.ample_canonical = classify_ample(ws);
  return r;
}

bool classify_ample(const WeightSystem& ws) {
  require_well_formed(ws);
  return paired_clause(ws) && ws.L > checked_mul(2, ws.w[0] + ws.w[2]);
}

std::vector<std::pair<Int, Int>> enumerate_ample_pairs(Int max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 2; a <= max; ++a) {
    for (Int c = a; c <= max; ++c) {
      if (gcd(a, c) == 1 && a * c - 2 * a - 2 * c > 0) out.emplace_back(a, c);
    }
  }
  return out;
}

}  // namespace pbrat
