#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "pbrat/classify.hpp"
#include "pbrat/semigroup.hpp"

using namespace pbrat;

namespace {

std::int64_t i64(Int v) { return static_cast<std::int64_t>(v); }

std::vector<std::int64_t> plain(std::span<const Int> xs) {
  std::vector<std::int64_t> out;
  for (Int x : xs) out.push_back(i64(x));
  return out;
}

template <class F>
void for_each_ascending(Int max, F&& f) {
  for (Int a = 1; a <= max; ++a)
    for (Int b = a; b <= max; ++b)
      for (Int c = b; c <= max; ++c)
        for (Int d = c; d <= max; ++d) f(Quad{a, b, c, d});
}

Int witness_total(const ClassificationReport& r) {
  Int total = 0;
  for (std::size_t i = 0; i < 4; ++i) total += (*r.witness)[i] * r.weights.w[i];
  return total;
}

}  // namespace

TEST(ClassifyHypersurface, PairedCoprime) {
  const auto r = classify_hypersurface(WeightSystem::make({7, 7, 3, 3}, 21));
  EXPECT_EQ(r.verdict, Verdict::Rational);
  EXPECT_EQ(r.criterion, Criterion::PairedCoprime);
  EXPECT_EQ(i64(r.alpha), 1);
  EXPECT_TRUE(r.ample_canonical);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(ClassifyHypersurface, NegativeAmplitude) {
  const auto r = classify_hypersurface(WeightSystem::make({1, 1, 1, 1}, 2));
  EXPECT_EQ(r.verdict, Verdict::Rational);
  EXPECT_EQ(r.criterion, Criterion::NegativeAmplitude);
  EXPECT_EQ(i64(r.alpha), -2);
  EXPECT_FALSE(r.ample_canonical);
}

TEST(ClassifyHypersurface, AmplitudeInSemigroup) {
  const auto r = classify_hypersurface(WeightSystem::make({21, 14, 6, 1}, 42));
  EXPECT_EQ(r.verdict, Verdict::NotRational);
  EXPECT_EQ(r.criterion, Criterion::AmplitudeInSemigroup);
  EXPECT_EQ(i64(r.alpha), 0);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(plain(*r.witness), (std::vector<std::int64_t>{0, 0, 0, 0}));

  // Paired weights but n = 2: alpha = 42 - 20 = 22 = 7 + 3*5 ... in <3,7>.
  const auto r2 = classify_hypersurface(WeightSystem::make({3, 3, 7, 7}, 42));
  EXPECT_EQ(r2.verdict, Verdict::NotRational);
  ASSERT_TRUE(r2.witness.has_value());
  EXPECT_EQ(i64(witness_total(r2)), 22);
}

TEST(ClassifyHypersurface, RejectsIllFormedWeights) {
  try {
    classify_hypersurface(WeightSystem::make({2, 2, 4, 3}, 12));
    FAIL() << "expected NotWellFormed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotWellFormed);
  }
  EXPECT_THROW(classify_ample(WeightSystem::make({1, 5, 5, 5}, 5)), Error);
}

TEST(ClassifyPb, WorkedExample) {
  const auto r = classify_pb(ExponentTuple({3, 7, 14, 87}));
  EXPECT_EQ(r.verdict, Verdict::Rational);
  EXPECT_EQ(r.criterion, Criterion::PairedCoprime);
  ASSERT_TRUE(r.reduced.has_value());
  EXPECT_EQ(plain(r.reduced->values()), (std::vector<std::int64_t>{3, 3, 7, 7}));
  EXPECT_EQ(plain(r.input->values()), (std::vector<std::int64_t>{3, 7, 14, 87}));
  EXPECT_FALSE(r.rational_singularity_at_origin);
  EXPECT_TRUE(r.ample_canonical);
}

TEST(ClassifyPb, QuadricCone) {
  const auto r = classify_pb(ExponentTuple({2, 2, 2, 2}));
  EXPECT_EQ(r.verdict, Verdict::Rational);
  EXPECT_EQ(r.criterion, Criterion::NegativeAmplitude);
  EXPECT_TRUE(r.rational_singularity_at_origin);
}

TEST(ClassifyPb, ReciprocalSumExactlyOne) {
  const auto r = classify_pb(ExponentTuple({2, 3, 7, 42}));
  EXPECT_EQ(r.verdict, Verdict::NotRational);
  EXPECT_EQ(r.criterion, Criterion::AmplitudeInSemigroup);
  EXPECT_FALSE(r.rational_singularity_at_origin);
  EXPECT_EQ(i64(r.alpha), 0);
}

TEST(ClassifyAmple, Examples) {
  EXPECT_TRUE(classify_ample(WeightSystem::make({7, 7, 3, 3}, 21)));
  EXPECT_TRUE(classify_ample(WeightSystem::make({5, 5, 4, 4}, 20)));
  EXPECT_FALSE(classify_ample(WeightSystem::make({3, 3, 2, 2}, 6)));
}

TEST(EnumerateAmple, Examples) {
  const auto seven = enumerate_ample_pairs(7);
  const auto has = [&](Int a, Int c) {
    return std::find(seven.begin(), seven.end(), std::pair<Int, Int>{a, c}) != seven.end();
  };
  EXPECT_TRUE(has(3, 7));
  EXPECT_TRUE(has(4, 5));
  EXPECT_FALSE(has(3, 5));
  for (const auto& [a, c] : seven) EXPECT_NE(i64(a), 2);
  EXPECT_TRUE(std::is_sorted(seven.begin(), seven.end()));
  EXPECT_TRUE(enumerate_ample_pairs(4).empty());
  EXPECT_TRUE(enumerate_ample_pairs(2).empty());
}

TEST(EnumerateAmple, EveryPairGivesAmpleRationalSurface) {
  for (const auto& [a, c] : enumerate_ample_pairs(20)) {
    const auto ws = weights_of(ExponentTuple({a, a, c, c}));
    ASSERT_TRUE(classify_ample(ws)) << i64(a) << "," << i64(c);
  }
}

TEST(ClassifyPb, PermutationInvariant) {
  for_each_ascending(20, [](const Quad& q) {
    const auto base = classify_pb(ExponentTuple(q));
    Quad p = q;
    std::sort(p.begin(), p.end());
    do {
      ASSERT_EQ(classify_pb(ExponentTuple(p)).verdict, base.verdict);
      // The reduction itself commutes with permutations.
      static constexpr std::array<std::size_t, 4> kOrder{0, 1, 2, 3};
      auto reduced = reduce_sequence(std::vector<Int>(p.begin(), p.end()), kOrder);
      std::sort(reduced.begin(), reduced.end());
      ASSERT_EQ(plain(reduced), plain(base.reduced->values()));
    } while (std::next_permutation(p.begin(), p.end()));
  });
}

TEST(ClassifyPb, RationalSingularityImpliesRational) {
  for_each_ascending(20, [](const Quad& q) {
    const auto r = classify_pb(ExponentTuple(q));
    if (r.rational_singularity_at_origin) ASSERT_EQ(r.verdict, Verdict::Rational);
  });
}

TEST(ClassifyPb, AgreesWithHypersurfaceClassifierAndWitnessesCheck) {
  for_each_ascending(16, [](const Quad& q) {
    const auto pb = classify_pb(ExponentTuple(q));
    const auto hyp = classify_hypersurface(weights_of(*pb.reduced));
    ASSERT_EQ(pb.verdict, hyp.verdict);
    ASSERT_EQ(pb.criterion, hyp.criterion);
    ASSERT_EQ(pb.ample_canonical, hyp.ample_canonical);
    if (pb.verdict == Verdict::NotRational) {
      ASSERT_TRUE(pb.witness.has_value());
      ASSERT_EQ(i64(witness_total(pb)), i64(pb.alpha));
    }
    if (pb.ample_canonical) {
      ASSERT_EQ(pb.verdict, Verdict::Rational);
      ASSERT_GT(i64(pb.alpha), 0);
    }
  });
}

// d = sum(w) or d >= max(2L, sum(w)) rules out rationality.
TEST(ClassifyHypersurface, LargeDegreeIsNeverRational) {
  std::size_t hits = 0;
  for_each_ascending(16, [&](const Quad& q) {
    const ExponentTuple t(q);
    if (cotype(t) != 0) return;
    const WeightSystem ws = weights_of(t);
    const Int sum = ws.w[0] + ws.w[1] + ws.w[2] + ws.w[3];
    if (ws.degree == sum || ws.degree >= std::max(2 * ws.L, sum)) {
      ++hits;
      ASSERT_EQ(classify_hypersurface(ws).verdict, Verdict::NotRational);
    }
  });
  EXPECT_GT(hits, 0u);
}
