#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "pbrat/semigroup.hpp"

using namespace pbrat;

namespace {

std::int64_t i64(Int v) { return static_cast<std::int64_t>(v); }

SemigroupSpec sg(std::vector<Int> g) { return SemigroupSpec(std::move(g)); }

std::vector<std::int64_t> entries(const AperyTable& t) {
  std::vector<std::int64_t> out;
  for (Int e : t.entries) out.push_back(i64(e));
  return out;
}

// Every generator set with 1..max_gens distinct entries in [1, bound] and gcd 1.
template <class F>
void for_each_numerical_set(Int bound, std::size_t max_gens, F&& f) {
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int from) -> void {
    if (!cur.empty() && gcd_all(cur) == 1) f(cur);
    if (cur.size() == max_gens) return;
    for (Int x = from; x <= bound; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

TEST(Semigroup, ConstructionDeduplicatesAndSorts) {
  const auto s = sg({7, 3, 7, 3});
  ASSERT_EQ(s.generators().size(), 2u);
  EXPECT_EQ(i64(s.generators()[0]), 3);
  EXPECT_EQ(i64(s.generators()[1]), 7);
  EXPECT_EQ(sg({5, 5}).generators().size(), 1u);
  EXPECT_THROW(sg({}), Error);
  EXPECT_THROW(sg({3, -1}), Error);
}

TEST(Semigroup, MembershipExamples) {
  EXPECT_FALSE(membership(sg({3, 7}), 11));
  EXPECT_TRUE(membership(sg({3, 7}), 0));
  EXPECT_FALSE(membership(sg({3, 5, 7}), 4));
  EXPECT_FALSE(membership(sg({3, 7}), -3));
  // Non-numerical semigroups answer through their saturation.
  EXPECT_TRUE(membership(sg({4, 6}), 14));
  EXPECT_FALSE(membership(sg({4, 6}), 15));
  EXPECT_FALSE(membership(sg({4, 6}), 2));
}

TEST(Semigroup, AperyExamples) {
  EXPECT_EQ(entries(apery(sg({3, 7}))), (std::vector<std::int64_t>{0, 7, 14}));
  EXPECT_EQ(entries(apery(sg({2, 3}))), (std::vector<std::int64_t>{0, 3}));
  EXPECT_EQ(entries(apery(sg({1}))), (std::vector<std::int64_t>{0}));
  try {
    apery(sg({4, 6}));
    FAIL() << "expected NotNumerical";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNumerical);
  }
}

TEST(Semigroup, Frobenius) {
  EXPECT_EQ(i64(frobenius(sg({3, 7}))), 11);
  EXPECT_EQ(i64(frobenius(sg({2, 3}))), 1);
  EXPECT_EQ(i64(frobenius(sg({3, 5, 7}))), 4);
  EXPECT_EQ(i64(frobenius(sg({1}))), -1);
  EXPECT_EQ(i64(frobenius(sg({1, 5, 9}))), -1);
  EXPECT_THROW(frobenius(sg({6, 10, 14})), Error);
}

TEST(Semigroup, TwoGeneratorBound) {
  EXPECT_TRUE(two_gen_bound(3, 7, 12));
  EXPECT_FALSE(two_gen_bound(3, 7, 11));
  EXPECT_TRUE(two_gen_bound(4, 6, 14));
  EXPECT_FALSE(two_gen_bound(4, 6, 15));
}

TEST(Semigroup, BrauerBoundExamples) {
  EXPECT_EQ(i64(brauer_bound(3, 5, 7)), 21);
  EXPECT_EQ(i64(brauer_bound(2, 3, 5)), 6);
  EXPECT_EQ(i64(brauer_bound(1, 2, 3)), -1);
  try {
    brauer_bound(2, 4, 6);
    FAIL() << "expected NotCoprime";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
}

TEST(Semigroup, FrobeniusMatchesNaiveScan) {
  std::size_t sets = 0;
  for_each_numerical_set(20, 4, [&](const std::vector<Int>& gens) {
    std::vector<oracle::i64> plain(gens.begin(), gens.end());
    ASSERT_EQ(i64(frobenius(sg(gens))), oracle::frobenius(plain));
    ++sets;
  });
  EXPECT_GT(sets, 5000u);
}

TEST(Semigroup, AperyInvariantsAndMembershipConsistency) {
  for_each_numerical_set(12, 3, [&](const std::vector<Int>& gens) {
    const auto spec = sg(gens);
    const AperyTable t = apery(spec);
    ASSERT_EQ(i64(t.modulus), i64(spec.generators()[0]));
    ASSERT_EQ(i64(t.entries[0]), 0);
    for (std::size_t r = 0; r < t.entries.size(); ++r) {
      ASSERT_EQ(i64(t.entries[r] % t.modulus), static_cast<std::int64_t>(r));
      ASSERT_FALSE(membership(spec, t.entries[r] - t.modulus));
    }
    const Int F = frobenius(spec);
    std::vector<oracle::i64> plain(gens.begin(), gens.end());
    const auto table = oracle::reachable(plain, 200);
    for (Int n = 0; n <= 200; ++n) {
      const bool m = membership(spec, n);
      ASSERT_EQ(m, table[static_cast<std::size_t>(n)] != 0);
      ASSERT_EQ(m, n >= t.entries[static_cast<std::size_t>(n % t.modulus)]);
      if (n > F) ASSERT_TRUE(m);
    }
  });
}

TEST(Semigroup, RepresentationSumsBack) {
  for_each_numerical_set(10, 3, [&](const std::vector<Int>& gens) {
    const auto spec = sg(gens);
    for (Int n = 0; n <= 120; ++n) {
      const auto rep = representation(spec, n);
      ASSERT_EQ(rep.has_value(), membership(spec, n));
      if (!rep) continue;
      Int total = 0;
      for (std::size_t i = 0; i < rep->size(); ++i) {
        ASSERT_GE(i64((*rep)[i]), 0);
        total += (*rep)[i] * spec.generators()[i];
      }
      ASSERT_EQ(i64(total), i64(n));
    }
  });
  const auto rep = representation(sg({4, 6}), 14);
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(i64((*rep)[0] * 4 + (*rep)[1] * 6), 14);
}

TEST(Semigroup, TwoGeneratorBoundImpliesMembership) {
  for (Int d1 = 1; d1 <= 40; ++d1) {
    for (Int d2 = 1; d2 <= 40; ++d2) {
      const auto spec = sg({d1, d2});
      const Int limit = 2 * lcm(d1, d2);
      for (Int n = 0; n <= limit; ++n) {
        if (two_gen_bound(d1, d2, n)) ASSERT_TRUE(membership(spec, n)) << i64(d1) << "," << i64(d2) << "," << i64(n);
      }
    }
  }
}

TEST(Semigroup, BrauerBoundHoldsForCoprimeTriples) {
  for (Int a = 1; a <= 40; ++a) {
    for (Int b = 1; b <= 40; ++b) {
      for (Int c = 1; c <= 40; ++c) {
        if (gcd(gcd(a, b), c) != 1) continue;
        ASSERT_LE(i64(frobenius(sg({a, b, c}))), i64(brauer_bound(a, b, c)));
      }
    }
  }
}

TEST(Semigroup, LargeModulusIsRejected) {
  EXPECT_THROW(sg({kMaxAperyModulus + 1, kMaxAperyModulus + 2}), Error);
}
