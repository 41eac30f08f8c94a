#include <random>

#include <gtest/gtest.h>

#include "canon/rhythm.hpp"
#include "oracles.hpp"

namespace canon {
namespace {

using Elements = std::vector<int>;

Rhythm random_rhythm(std::mt19937& rng, int n, bool non_empty = true) {
  std::bernoulli_distribution coin(0.4);
  Elements e;
  for (int i = 0; i < n; ++i) {
    if (coin(rng)) e.push_back(i);
  }
  if (non_empty && e.empty()) e.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  return Rhythm(n, e);
}

TEST(RhythmTest, ConstructionSortsAndValidates) {
  Rhythm a(9, {5, 0, 1});
  EXPECT_EQ(a.elements(), (Elements{0, 1, 5}));
  EXPECT_EQ(a.to_string(), "0,1,5");
  EXPECT_THROW(Rhythm(9, {0, 1, 1}), RhythmError);
  EXPECT_THROW(Rhythm(9, {0, 9}), RhythmError);
  EXPECT_THROW(Rhythm(9, {-1}), RhythmError);
  EXPECT_THROW(Rhythm(0, {}), RhythmError);
  EXPECT_TRUE(Rhythm::empty(5).is_empty());
}

TEST(RhythmTest, MaximalDivisors) {
  EXPECT_EQ(maximal_divisors(72).maximal_divisors, (Elements{24, 36}));
  EXPECT_EQ(maximal_divisors(9).maximal_divisors, (Elements{3}));
  EXPECT_EQ(maximal_divisors(420).maximal_divisors, (Elements{60, 84, 140, 210}));
  EXPECT_EQ(maximal_divisors(180).maximal_divisors, (Elements{36, 60, 90}));
  EXPECT_EQ(maximal_divisors(900).maximal_divisors, (Elements{180, 300, 450}));
  EXPECT_EQ(maximal_divisors(7).maximal_divisors, (Elements{1}));
  EXPECT_THROW(maximal_divisors(1), RhythmError);
  EXPECT_THROW(maximal_divisors(0), RhythmError);
}

TEST(RhythmTest, FactorizationReassemblesN) {
  for (int n = 2; n <= 1000; ++n) {
    const auto d = maximal_divisors(n);
    long long product = 1;
    for (auto [p, alpha] : d.prime_factorization) {
      for (int k = 0; k < alpha; ++k) product *= p;
      EXPECT_NE(std::find(d.maximal_divisors.begin(), d.maximal_divisors.end(), n / p), d.maximal_divisors.end());
    }
    EXPECT_EQ(product, n);
    EXPECT_EQ(d.prime_count(), d.maximal_divisors.size());
  }
}

TEST(RhythmTest, Translate) {
  const Rhythm a(9, {0, 1, 5});
  EXPECT_EQ(translate(a, 0), a);
  EXPECT_EQ(translate(a, 3).elements(), (Elements{3, 4, 8}));
  EXPECT_EQ(translate(Rhythm(9, {0, 3, 6}), 3), Rhythm(9, {0, 3, 6}));
  EXPECT_EQ(translate(a, -1).elements(), (Elements{0, 4, 8}));
  EXPECT_EQ(translate(a, 9 * 1000 + 3), translate(a, 3));
}

TEST(RhythmTest, SmallestPeriod) {
  EXPECT_EQ(smallest_period(Rhythm(9, {0, 3, 6})), 3);
  EXPECT_EQ(smallest_period(Rhythm(9, {0, 1, 5})), std::nullopt);
  EXPECT_EQ(smallest_period(Rhythm(72, {0, 8, 16, 18, 26, 34})), std::nullopt);
  EXPECT_EQ(smallest_period(Rhythm(3, {0, 1, 2})), 1);
  EXPECT_EQ(smallest_period(Rhythm(1, {0})), std::nullopt);
  EXPECT_THROW(smallest_period(Rhythm::empty(4)), RhythmError);
}

TEST(RhythmTest, PeriodicFast) {
  EXPECT_TRUE(is_periodic_fast(Rhythm(9, {0, 3, 6}), maximal_divisors(9)));
  EXPECT_FALSE(is_periodic_fast(Rhythm(9, {0, 1, 5}), maximal_divisors(9)));
  EXPECT_FALSE(is_periodic_fast(Rhythm(4, {0}), maximal_divisors(4)));
  EXPECT_THROW(is_periodic_fast(Rhythm(4, {0}), maximal_divisors(6)), RhythmError);
  EXPECT_FALSE(is_periodic(Rhythm(1, {0})));
}

TEST(RhythmTest, Tiling) {
  EXPECT_TRUE(is_tiling(Rhythm(9, {0, 1, 5}), Rhythm(9, {0, 3, 6})));
  EXPECT_FALSE(is_tiling(Rhythm(9, {0, 1, 5}), Rhythm(9, {0, 1, 3})));
  EXPECT_TRUE(is_tiling(Rhythm(3, {0}), Rhythm(3, {0, 1, 2})));
  EXPECT_THROW(is_tiling(Rhythm(9, {0}), Rhythm(8, {0})), RhythmError);
  EXPECT_THROW(is_tiling(Rhythm(9, {0}), Rhythm::empty(9)), RhythmError);
}

TEST(RhythmTest, PolynomialCheck) {
  EXPECT_TRUE(poly_tiling_check(Rhythm(9, {0, 1, 5}), Rhythm(9, {0, 3, 6})));
  EXPECT_FALSE(poly_tiling_check(Rhythm(4, {0, 1}), Rhythm(4, {0, 1})));
  EXPECT_TRUE(poly_tiling_check(Rhythm(4, {0, 2}), Rhythm(4, {0, 1})));
  EXPECT_THROW(poly_tiling_check(Rhythm(4, {0}), Rhythm(5, {0})), RhythmError);

  // (1 + x)^2 = 1 + 2x + x^2: over-covering shows up as a coefficient 2.
  const auto product = cyclic_product(characteristic_polynomial(Rhythm(4, {0, 1})),
                                      characteristic_polynomial(Rhythm(4, {0, 1})));
  EXPECT_EQ(product, (std::vector<long long>{1, 2, 1, 0}));
}

TEST(RhythmTest, Canonicalize) {
  EXPECT_EQ(canonicalize(Rhythm(9, {1, 2, 6})).elements(), (Elements{0, 1, 5}));
  EXPECT_EQ(canonicalize(Rhythm(9, {0, 3, 6})).elements(), (Elements{0, 3, 6}));
  EXPECT_EQ(canonicalize(Rhythm(9, {0, 1, 5})).elements(), (Elements{0, 1, 5}));
  EXPECT_THROW(canonicalize(Rhythm::empty(3)), RhythmError);
}

TEST(RhythmTest, ParseText) {
  EXPECT_EQ(parse_rhythm("0,1,5", 9), Rhythm(9, {0, 1, 5}));
  EXPECT_EQ(parse_rhythm(" 5, 0 ,1 ", 9), Rhythm(9, {0, 1, 5}));
  EXPECT_TRUE(parse_rhythm("", 9).is_empty());
  EXPECT_THROW(parse_rhythm("0,1,1", 9), RhythmError);
  EXPECT_THROW(parse_rhythm("0,9", 9), RhythmError);
  EXPECT_THROW(parse_rhythm("0;1", 9), RhythmError);
  EXPECT_THROW(parse_rhythm("0,,1", 9), RhythmError);
  EXPECT_THROW(parse_rhythm("a", 9), RhythmError);
}

TEST(RhythmTest, ParseJson) {
  EXPECT_EQ(parse_rhythm_json(R"({"n": 9, "elements": [0,1,5]})"), Rhythm(9, {0, 1, 5}));
  EXPECT_EQ(to_json(Rhythm(9, {0, 1, 5})), R"({"n":9,"elements":[0,1,5]})");
  EXPECT_EQ(parse_rhythm_json(to_json(Rhythm(72, {0, 8, 16}))), Rhythm(72, {0, 8, 16}));
  EXPECT_THROW(parse_rhythm_json(R"({"n": 9, "elements": [0,0]})"), RhythmError);
  EXPECT_THROW(parse_rhythm_json(R"({"n": 9, "elements": [10]})"), RhythmError);
  EXPECT_THROW(parse_rhythm_json(R"({"elements": [1]})"), RhythmError);
  EXPECT_THROW(parse_rhythm_json(R"({"n": 9, "elements": ["1"]})"), RhythmError);
  EXPECT_THROW(parse_rhythm_json("not json"), RhythmError);
}

// Properties checked against the brute-force oracles.

TEST(RhythmPropertyTest, CanonicalizeIsTranslationInvariantAndLexMin) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const Rhythm a = random_rhythm(rng, n);
    const Rhythm c = canonicalize(a);
    EXPECT_EQ(c.elements(), oracle::canonical(a.elements(), n));
    EXPECT_TRUE(c.contains(0));
    EXPECT_EQ(canonicalize(c), c);
    const int t = std::uniform_int_distribution<int>(-100, 100)(rng);
    EXPECT_EQ(canonicalize(translate(a, t)), c);
  }
}

TEST(RhythmPropertyTest, PeriodExhaustiveAgreement) {
  // Every non-empty subset of Z_n for n <= 16, sampled subsets up to 24.
  for (int n = 1; n <= 16; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Elements e;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) e.push_back(i);
      }
      const Rhythm a(n, e);
      const auto z = smallest_period(a);
      ASSERT_EQ(z, oracle::period(e, n)) << a.to_string() << " in Z_" << n;
      ASSERT_EQ(z.has_value(), is_periodic(a)) << a.to_string() << " in Z_" << n;
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(17, 24)(rng);
    const Rhythm a = random_rhythm(rng, n);
    const auto z = smallest_period(a);
    ASSERT_EQ(z.has_value(), is_periodic_fast(a, maximal_divisors(n)));
    if (z) {
      EXPECT_EQ(n % *z, 0);
      for (int k = 0; k < n / *z; ++k) EXPECT_EQ(translate(a, k * *z), a);
    }
  }
}

TEST(RhythmPropertyTest, TilingAgreesWithPolynomialAndOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Rhythm a = random_rhythm(rng, n);
    const Rhythm b = random_rhythm(rng, n);
    const bool tiles = is_tiling(a, b);
    ASSERT_EQ(tiles, poly_tiling_check(a, b));
    ASSERT_EQ(tiles, oracle::tiles(a.elements(), b.elements(), n));
    if (a.size() * b.size() != static_cast<std::size_t>(n)) {
      ASSERT_FALSE(tiles);
    }
    const int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
    ASSERT_EQ(tiles, is_tiling(translate(a, t), translate(b, s)));
  }
}

TEST(RhythmPropertyTest, TilingPairsAreFoundByPolynomialCheck) {
  // Random pairs rarely tile; run the check over every complement of a few sets.
  for (auto [n, elements] : std::vector<std::pair<int, Elements>>{{12, {0, 1, 6, 7}}, {12, {0, 2, 4}}, {9, {0, 1, 5}}}) {
    for (const auto& b : oracle::complements_by_subsets(elements, n)) {
      EXPECT_TRUE(is_tiling(Rhythm(n, elements), Rhythm(n, b)));
      EXPECT_TRUE(poly_tiling_check(Rhythm(n, elements), Rhythm(n, b)));
    }
  }
}

}  // namespace
}  // namespace canon
