#include <numeric>

#include <gtest/gtest.h>

#include "canon/vuza.hpp"
#include "oracles.hpp"

namespace canon {
namespace {

using Elements = std::vector<int>;

// Independent form of the construction: all sums n3 * (p1 n1 j + p2 n2 i).
Elements construction_by_sums(const VuzaParams& p) {
  const int n = static_cast<int>(p.product());
  Elements out;
  for (int j = 0; j < p.n2; ++j) {
    for (int i = 0; i < p.n1; ++i) out.push_back((p.n3 * (p.p1 * p.n1 * j + p.p2 * p.n2 * i)) % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(VuzaTest, Validation) {
  EXPECT_TRUE(validate({2, 2, 3, 3, 2}, 72));
  EXPECT_TRUE(validate({2, 2, 3, 3, 3}, 108));
  EXPECT_FALSE(validate({2, 2, 3, 3, 2}, 73));  // product mismatch
  EXPECT_FALSE(validate({2, 2, 2, 3, 3}, 72));  // gcd(p1 n1, p2 n2) = 2
  EXPECT_FALSE(validate({1, 2, 3, 3, 4}, 72));  // parameter below 2
  EXPECT_FALSE(validate({2, 2, 3, 3, 0}, 0));
  EXPECT_TRUE(vuza_violation({2, 2, 2, 3, 3}, 72).has_value());
  EXPECT_FALSE(vuza_violation({2, 2, 3, 3, 2}, 72).has_value());
}

TEST(VuzaTest, SmallestInstance) {
  const Rhythm a = construct_inner({2, 2, 3, 3, 2}, 72);
  EXPECT_EQ(a.elements(), (Elements{0, 8, 16, 18, 26, 34}));
  EXPECT_EQ(a.size(), 6u);
  EXPECT_FALSE(is_periodic(a));
  EXPECT_EQ(canonicalize(a).elements(), (Elements{0, 2, 10, 18, 56, 64}));
}

TEST(VuzaTest, KnownConstructions) {
  EXPECT_EQ(construct_inner({2, 2, 3, 3, 3}, 108).elements(), (Elements{0, 12, 24, 27, 39, 51}));
  EXPECT_EQ(construct_inner({2, 2, 5, 3, 2}, 120).elements(), (Elements{0, 8, 16, 30, 38, 46}));
  EXPECT_EQ(construct_inner({2, 2, 3, 5, 2}, 120).elements(), (Elements{0, 8, 16, 24, 30, 32, 38, 46, 54, 62}));
  EXPECT_EQ(construct_inner({4, 2, 3, 3, 2}, 144).elements(), (Elements{0, 16, 18, 32, 34, 50}));
  EXPECT_EQ(construct_inner({2, 4, 3, 3, 2}, 144).elements(),
            (Elements{0, 16, 18, 32, 34, 36, 50, 52, 54, 68, 70, 86}));
}

TEST(VuzaTest, InvalidParametersThrow) {
  EXPECT_THROW(construct_inner({2, 2, 2, 3, 3}, 72), RhythmError);
  EXPECT_THROW(construct_inner({2, 2, 3, 3, 2}, 144), RhythmError);
  EXPECT_THROW(construct_inner({1, 2, 3, 3, 4}, 72), RhythmError);
}

TEST(VuzaPropertyTest, EveryValidTupleGivesAnAperiodicRhythmOfSizeN1N2) {
  int checked = 0;
  for (int p1 = 2; p1 <= 5; ++p1) {
    for (int n1 = 2; n1 <= 5; ++n1) {
      for (int p2 = 2; p2 <= 5; ++p2) {
        for (int n2 = 2; n2 <= 5; ++n2) {
          for (int n3 = 2; n3 <= 3; ++n3) {
            const VuzaParams p{p1, n1, p2, n2, n3};
            const int n = static_cast<int>(p.product());
            if (std::gcd(p1 * n1, p2 * n2) != 1) {
              EXPECT_FALSE(validate(p, n));
              continue;
            }
            ASSERT_TRUE(validate(p, n)) << p.to_string();
            const Rhythm a = construct_inner(p, n);
            EXPECT_EQ(a.elements(), construction_by_sums(p)) << p.to_string();
            EXPECT_EQ(a.size(), static_cast<std::size_t>(n1 * n2));
            EXPECT_TRUE(a.contains(0));
            EXPECT_FALSE(oracle::period(a.elements(), n).has_value()) << p.to_string();
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 20);
}

}  // namespace
}  // namespace canon
