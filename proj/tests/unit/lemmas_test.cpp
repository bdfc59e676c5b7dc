#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"
#include "graphent/inequalities.hpp"
#include "oracles.hpp"

using namespace graphent;

TEST(Lemma1, Example) {
  // x = 2, y = 1, r = 2: 2 < 3 < 4.
  const LemmaCheck c = check_lemma1(2.0, 1.0, 2.0);
  EXPECT_EQ(c.lemma, LemmaId::kL1);
  EXPECT_TRUE(c.satisfied);
  EXPECT_NEAR(c.margin, 1.0, 1e-12);
}

TEST(Lemma1, ReversedBetweenZeroAndOne) {
  const LemmaCheck c = check_lemma1(4.0, 1.0, 0.5);
  EXPECT_TRUE(c.satisfied);
  EXPECT_GT(c.margin, 0.0);
  EXPECT_TRUE(check_lemma1(0.5, 3.0, -1.5).satisfied);
}

TEST(Lemma1, RejectsDegenerateInputs) {
  EXPECT_THROW(check_lemma1(1.0, 1.0, 2.0), DomainError);
  EXPECT_THROW(check_lemma1(2.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(check_lemma1(2.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(check_lemma1(-2.0, 1.0, 2.0), DomainError);
}

TEST(Lemma2, EqualityCase) {
  const LemmaCheck c = check_lemma2({{1.0, 0.0}, {0.0, 1.0}}, 0.5);
  EXPECT_TRUE(c.satisfied);
  EXPECT_NEAR(c.margin, 0.0, 1e-12);
}

TEST(Lemma2, MinkowskiRegime) {
  // (sum (a+b)^2)^(1/2) <= |a| + |b|.
  const LemmaCheck c = check_lemma2({{3.0, 0.0}, {0.0, 4.0}}, 2.0);
  EXPECT_TRUE(c.satisfied);
  EXPECT_NEAR(c.margin, 2.0, 1e-12);
  EXPECT_THROW(check_lemma2({{1.0}, {-1.0}}, 2.0), DomainError);
  EXPECT_THROW(check_lemma2({{1.0}, {1.0, 2.0}}, 2.0), DomainError);
}

TEST(Lemma3, Example) {
  const LemmaCheck c = check_lemma3({0.5, 0.5}, {1.0, 2.0});
  EXPECT_TRUE(c.satisfied);
  EXPECT_GE(c.margin, 0.0);
  EXPECT_THROW(check_lemma3({0.5, 0.5}, {1.0}), DomainError);
  EXPECT_THROW(check_lemma3({0.5, 0.5}, {1.0, 0.0}), DomainError);
}

TEST(Lemma3, FrozenValues) {
  // gap 0.0719280948873623, bound 0.135252660083340
  const LemmaCheck c = check_lemma3({0.75, 0.25}, {1.0, 2.0});
  EXPECT_TRUE(c.satisfied);
  EXPECT_NEAR(c.margin, 0.0633245651959780, 1e-12);
}

TEST(Lemmas, SampledChecksAllHold) {
  const auto checks = lemma_checks(2024, 3400);
  ASSERT_EQ(checks.size(), 3u * 3400u);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    EXPECT_EQ(checks[i].lemma, static_cast<LemmaId>(i % 3));
    EXPECT_TRUE(checks[i].satisfied) << to_string(checks[i].lemma) << " #" << i;
  }
}

TEST(Lemmas, SamplingIsDeterministic) {
  const auto a = lemma_checks(9, 50);
  const auto b = lemma_checks(9, 50);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].inputs, b[i].inputs);
}

// Property: hand-rolled random instances, independent of the library sampler.
TEST(Lemmas, RandomInstances) {
  oracle::Rng rng(61);
  std::uniform_real_distribution<double> pos(0.01, 50.0);
  std::uniform_real_distribution<double> expo(-4.0, 5.0);
  for (int t = 0; t < 2000; ++t) {
    const double x = pos(rng);
    const double y = x * (1.0 + std::uniform_real_distribution<double>(0.05, 3.0)(rng));
    double r = expo(rng);
    if (std::abs(r) < 0.05 || std::abs(r - 1.0) < 0.05) r = 2.5;
    EXPECT_TRUE(check_lemma1(x, y, r).satisfied) << x << " " << y << " " << r;

    const std::size_t k = 1 + t % 7;
    const auto p = oracle::random_distribution(rng, k, 2.0);
    std::vector<double> xs(k);
    for (auto& v : xs) v = pos(rng);
    EXPECT_TRUE(check_lemma3(p, xs).satisfied);

    std::vector<std::vector<double>> vs(2 + t % 3, std::vector<double>(k));
    for (auto& v : vs)
      for (auto& e : v) e = pos(rng);
    EXPECT_TRUE(check_lemma2(vs, std::uniform_real_distribution<double>(0.1, 4.0)(rng)).satisfied);
  }
}
