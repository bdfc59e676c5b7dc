#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "graphent/error.hpp"
#include "graphent/inequalities.hpp"
#include "oracles.hpp"

using namespace graphent;

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Values frozen from an independent 40-digit calculation.
constexpr double kHalf = 0.5;
constexpr double kRenyiHalf_09_01 = 0.678071905112638;
constexpr double kBelowOneLiteral = 0.495712168420558;
constexpr double kBelowOneCorrected = 19.9453786455903;
constexpr double kCor1Literal = 0.486094201481299;
constexpr double kCor1Corrected = 12.9338807468699;
constexpr double kShannon_099_001 = 0.0807931358959112;
constexpr double kRenyi3_099_001 = 0.0217486111149779;
constexpr double kAboveOneLiteral = 0.051647781534518;
constexpr double kAboveOneCorrected = -285.572824960119;

const Graph& star4() {
  static const Graph g = generate_graph(GraphClass::kStar, 4);
  return g;
}

}  // namespace

TEST(Finalize, SlackAndVerdictSemantics) {
  BoundReport r;
  r.lhs = 1.0;
  r.bound = 1.0 + 5e-10;
  r.direction = Direction::kUpper;
  finalize(r);
  EXPECT_TRUE(r.holds());
  r.bound = 1.0 - 5e-10;
  finalize(r);
  EXPECT_TRUE(r.holds());
  r.bound = 1.0 - 2e-9;
  finalize(r);
  EXPECT_TRUE(r.violated());
  EXPECT_NEAR(r.slack, -2e-9, 1e-15);

  r.direction = Direction::kLower;
  finalize(r);
  EXPECT_TRUE(r.holds());
  EXPECT_NEAR(r.slack, 2e-9, 1e-15);

  r.direction = Direction::kExact;
  finalize(r);
  EXPECT_TRUE(r.violated());

  r.precondition_met = false;
  finalize(r);
  EXPECT_EQ(r.verdict, Verdict::kNotApplicable);

  BoundReport two;
  two.direction = Direction::kTwoSided;
  two.lhs = 2.0;
  two.bound = 3.0;
  two.lower_bound = 1.5;
  finalize(two);
  EXPECT_EQ(two.slack, 0.5);
  EXPECT_TRUE(two.holds());
}

TEST(Names, RoundTrip) {
  for (TheoremId id : kAllTheorems) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_THROW(parse_theorem_id("thm9"), DomainError);
  EXPECT_EQ(parse_variant("corrected"), Variant::kCorrected);
  EXPECT_THROW(parse_variant("fixed"), DomainError);
}

TEST(JensenGap, Examples) {
  const BoundReport r = jensen_gap_bound(Distribution({0.9, 0.1}), kHalf);
  EXPECT_NEAR(r.lhs, 0.209076311523356, 1e-12);
  EXPECT_NEAR(r.bound, 0.346246809813351, 1e-12);
  EXPECT_EQ(r.direction, Direction::kUpper);
  EXPECT_TRUE(r.holds());

  const BoundReport u = jensen_gap_bound(Distribution({0.25, 0.25, 0.25, 0.25}), 3.0);
  EXPECT_NEAR(u.lhs, 0.0, 1e-15);
  EXPECT_EQ(u.bound, 0.0);
  EXPECT_TRUE(u.holds());

  const BoundReport q = jensen_gap_bound(Distribution({0.25, 0.75}), 2.0);
  EXPECT_NEAR(q.lhs, -0.133206219346495, 1e-12);
  EXPECT_NEAR(q.bound, -0.360673760222241, 1e-12);
  EXPECT_EQ(q.direction, Direction::kLower);
  EXPECT_TRUE(q.holds());
}

TEST(Thm1, BelowOneCounterexampleAsPrinted) {
  const auto reports = thm1_renyi_shannon_bounds(Distribution({0.9, 0.1}), kHalf,
                                                 Variant::kLiteral, false);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].theorem, TheoremId::kOrdering);
  EXPECT_TRUE(reports[0].holds());
  const BoundReport& r = reports[1];
  EXPECT_EQ(r.theorem, TheoremId::kThm1);
  EXPECT_NEAR(r.lhs, kRenyiHalf_09_01, 1e-12);
  EXPECT_NEAR(r.bound, kBelowOneLiteral, 1e-12);
  EXPECT_FALSE(r.holds());
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.params.at("rho"), 9.0);
}

TEST(Thm1, BelowOneCorrected) {
  const auto r = thm1_renyi_shannon_bounds(Distribution({0.9, 0.1}), kHalf,
                                           Variant::kCorrected, false)[1];
  EXPECT_NEAR(r.bound, kBelowOneCorrected, 1e-11);
  EXPECT_TRUE(r.holds());
}

TEST(Thm1, EpsilonVariants) {
  const Distribution d({0.9, 0.1});
  const auto lit = thm1_renyi_shannon_bounds(d, kHalf, Variant::kLiteral, true)[1];
  EXPECT_EQ(lit.theorem, TheoremId::kCor1);
  EXPECT_NEAR(lit.bound, kCor1Literal, 1e-12);
  EXPECT_TRUE(lit.violated());
  const auto cor = thm1_renyi_shannon_bounds(d, kHalf, Variant::kCorrected, true)[1];
  EXPECT_NEAR(cor.bound, kCor1Corrected, 1e-11);
  EXPECT_TRUE(cor.holds());
  // Above 1 the printed corollary carries no epsilon factor.
  const auto a3 = thm1_renyi_shannon_bounds(Distribution({0.99, 0.01}), 3.0,
                                            Variant::kLiteral, true)[1];
  EXPECT_NEAR(a3.bound, kAboveOneLiteral, 1e-12);
}

TEST(Thm1, AboveOneCounterexampleAsPrinted) {
  const Distribution d({0.99, 0.01});
  const auto reports = thm1_renyi_shannon_bounds(d, 3.0, Variant::kLiteral, false);
  EXPECT_NEAR(reports[0].bound, kShannon_099_001, 1e-12);
  EXPECT_TRUE(reports[0].holds());
  const BoundReport& r = reports[1];
  EXPECT_EQ(r.direction, Direction::kLower);
  EXPECT_NEAR(r.lhs, kRenyi3_099_001, 1e-12);
  EXPECT_NEAR(r.bound, kAboveOneLiteral, 1e-12);
  EXPECT_TRUE(r.violated());
  const auto c = thm1_renyi_shannon_bounds(d, 3.0, Variant::kCorrected, false)[1];
  EXPECT_NEAR(c.bound, kAboveOneCorrected, 1e-9);
  EXPECT_TRUE(c.holds());
}

TEST(Thm1, UniformCoincides) {
  const Distribution d(std::vector<double>(6, 1.0 / 6.0));
  for (double a : {0.3, 1.7, 4.0}) {
    const auto lit = thm1_renyi_shannon_bounds(d, a, Variant::kLiteral, false);
    const auto cor = thm1_renyi_shannon_bounds(d, a, Variant::kCorrected, false);
    EXPECT_TRUE(lit[0].holds());
    EXPECT_NEAR(lit[0].slack, 0.0, 1e-12);
    EXPECT_NEAR(lit[1].bound, cor[1].bound, 1e-12);
    EXPECT_TRUE(lit[1].holds());
  }
}

TEST(Thm1, AlphaOneRejected) {
  EXPECT_THROW(thm1_renyi_shannon_bounds(Distribution({0.5, 0.5}), 1.0, Variant::kLiteral, false),
               DomainError);
  EXPECT_THROW(jensen_gap_bound(Distribution({0.5, 0.5}), 1.0), DomainError);
  EXPECT_THROW(jensen_gap_bound(Distribution({0.5, 0.5}), -2.0), DomainError);
}

TEST(Thm2, UsesPartitionSize) {
  const Distribution d = partition_distribution(vertex_orbits(generate_graph(GraphClass::kStar, 10)));
  const auto r = thm2_partition_bounds(d, kHalf, Variant::kLiteral);
  EXPECT_EQ(r[1].theorem, TheoremId::kThm2);
  EXPECT_EQ(r[1].params.at("k"), 2.0);
  EXPECT_NEAR(r[1].bound, kBelowOneLiteral, 1e-12);
  EXPECT_TRUE(r[1].violated());
}

TEST(Thm3, StarExample) {
  const FunctionalValues fv = FunctionalValues::from_values({6, 4, 4, 4});
  const OrbitPartition part = vertex_orbits(star4());
  const BoundReport r = thm3_partition_vs_functional(star4(), part, fv, kHalf);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_NEAR(r.lhs, 0.899968626952992, 1e-12);
  EXPECT_NEAR(r.params.at("H_alpha_f"), 1.98780344045185, 1e-12);
  EXPECT_NEAR(r.bound, 4.15772844189416, 1e-12);
  EXPECT_TRUE(r.holds());

  const BoundReport a2 = thm3_partition_vs_functional(star4(), part, fv, 2.0);
  EXPECT_EQ(a2.direction, Direction::kLower);
  EXPECT_NEAR(a2.bound, -2.39231742277876, 1e-12);
  EXPECT_TRUE(a2.holds());
}

TEST(Thm3, PreconditionAndErrors) {
  const OrbitPartition part = vertex_orbits(star4());
  const BoundReport r = thm3_partition_vs_functional(
      star4(), part, FunctionalValues::from_values({1, 1, 1, 1}), kHalf);
  EXPECT_FALSE(r.precondition_met);
  EXPECT_EQ(r.verdict, Verdict::kNotApplicable);

  const Graph k4 = generate_graph(GraphClass::kComplete, 4);
  const BoundReport k = thm3_partition_vs_functional(
      k4, vertex_orbits(k4), FunctionalValues::from_values({6, 6, 6, 6}), 2.0);
  EXPECT_TRUE(k.precondition_met);
  EXPECT_EQ(k.lhs, 0.0);
  EXPECT_TRUE(k.holds());

  const Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(thm3_partition_vs_functional(split, vertex_orbits(split),
                                            FunctionalValues::from_values({5, 5, 5, 5}), kHalf),
               DomainError);
  EXPECT_THROW(thm3_partition_vs_functional(star4(), part,
                                            FunctionalValues::from_values({5, 5, 5}), kHalf),
               DomainError);
}

TEST(Thm4, Examples) {
  const Distribution d({0.3, 0.7});
  const BoundReport same = thm4_scaled_dominance(d, d, 1.0, 2.0);
  EXPECT_NEAR(same.slack, 0.0, 1e-15);
  EXPECT_TRUE(same.holds());

  const BoundReport r = thm4_scaled_dominance(Distribution({0.5, 0.5}),
                                              Distribution({0.25, 0.75}), 2.0, kHalf);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.bound, 1.89996862695299, 1e-12);
  EXPECT_TRUE(r.holds());

  const BoundReport na = thm4_scaled_dominance(Distribution({0.9, 0.1}),
                                               Distribution({0.5, 0.5}), 1.0, kHalf);
  EXPECT_FALSE(na.precondition_met);
  EXPECT_EQ(na.verdict, Verdict::kNotApplicable);

  EXPECT_THROW(thm4_scaled_dominance(Distribution({1.0}), Distribution({0.5, 0.5}), 1.0, kHalf),
               DomainError);
}

TEST(Thm4, CorollaryModes) {
  const FunctionalValues f1 = FunctionalValues::from_values({1, 2, 3});
  const FunctionalValues f2 = FunctionalValues::from_values({2, 2, 5});
  const BoundReport a = thm4_corollary(f1, f2, 3.0);
  EXPECT_EQ(a.theorem, TheoremId::kThm4Corollary);
  EXPECT_TRUE(a.precondition_met);
  EXPECT_NEAR(a.params.at("psi"), 1.5, 1e-12);
  EXPECT_TRUE(a.holds());

  const BoundReport b = thm4_scaled_dominance(distribution_from_values(f1),
                                              distribution_from_values(f2), 99.0, 3.0,
                                              FunctionalSums{6.0, 9.0});
  EXPECT_EQ(b.theorem, TheoremId::kThm4Corollary);
  EXPECT_NEAR(b.bound, a.bound, 1e-12);

  const BoundReport c = thm4_corollary(f2, f1, 3.0);
  EXPECT_FALSE(c.precondition_met);
}

TEST(Thm5, Examples) {
  const Distribution d({0.5, 0.5});
  const BoundReport lit = thm5_additive_dominance(d, d, 0.1, kHalf, Variant::kLiteral);
  EXPECT_NEAR(lit.bound, 1.89442719099992, 1e-12);
  EXPECT_NEAR(lit.lhs, 1.0, 1e-15);
  EXPECT_TRUE(lit.holds());
  const BoundReport cor = thm5_additive_dominance(d, d, 0.1, kHalf, Variant::kCorrected);
  EXPECT_NEAR(cor.bound, 2.29038567289182, 1e-12);

  const BoundReport tiny = thm5_additive_dominance(d, d, 1e-12, 2.0, Variant::kCorrected);
  EXPECT_NEAR(tiny.bound, tiny.lhs, 1e-10);
  EXPECT_TRUE(tiny.holds());

  const BoundReport na = thm5_additive_dominance(Distribution({0.9, 0.1}), d, 0.1, 2.0,
                                                 Variant::kLiteral);
  EXPECT_FALSE(na.precondition_met);
  EXPECT_THROW(thm5_additive_dominance(d, d, 0.0, 2.0, Variant::kLiteral), DomainError);
}

TEST(Thm5, NaturalLogBaseNeedsNoRepair) {
  const Distribution d1({0.2, 0.3, 0.5});
  const Distribution d2({0.25, 0.25, 0.5});
  const auto lit = thm5_additive_dominance(d1, d2, 0.05, 3.0, Variant::kLiteral, LogBase::kNatural);
  const auto cor = thm5_additive_dominance(d1, d2, 0.05, 3.0, Variant::kCorrected, LogBase::kNatural);
  EXPECT_DOUBLE_EQ(lit.bound, cor.bound);
  EXPECT_NEAR(lit.lhs, oracle::renyi({0.2, 0.3, 0.5}, 3.0) * kLn2, 1e-12);
}

TEST(Thm6, EqualFunctionals) {
  const FunctionalValues f = FunctionalValues::from_values({6, 4, 4, 4});
  for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
    const BoundReport r = thm6_convex_combination(star4(), f, f, 0.5, 0.5, kHalf, v, false);
    EXPECT_NEAR(r.params.at("A1"), 0.5, 1e-15);
    EXPECT_NEAR(r.lhs, 1.98780344045185, 1e-12);
    EXPECT_GT(r.bound, r.lhs);
    EXPECT_TRUE(r.holds());
  }
}

TEST(Thm6, StarAgainstConstant) {
  const FunctionalValues f1 = FunctionalValues::from_values({6, 4, 4, 4});
  const FunctionalValues f2 = FunctionalValues::from_values({1, 1, 1, 1});
  const auto lit = thm6_convex_combination(star4(), f1, f2, 1, 1, 2.0, Variant::kLiteral, false);
  EXPECT_NEAR(lit.lhs, 1.96466692688772, 1e-12);
  EXPECT_NEAR(lit.bound, 2.09011003402385, 1e-12);
  // The printed form drops 1/ln 2 and crosses the true value here.
  EXPECT_TRUE(lit.violated());
  const auto cor = thm6_convex_combination(star4(), f1, f2, 1, 1, 2.0, Variant::kCorrected, false);
  EXPECT_NEAR(cor.bound, 1.8969020783424, 1e-12);
  EXPECT_TRUE(cor.holds());

  const auto sym = thm6_convex_combination(star4(), f1, f2, 1, 1, 2.0, Variant::kLiteral, true);
  EXPECT_EQ(sym.theorem, TheoremId::kThm6Symmetric);
  EXPECT_NEAR(sym.bound, -0.078089059306618, 1e-12);
  const auto sym_c = thm6_convex_combination(star4(), f1, f2, 1, 1, 2.0, Variant::kCorrected, true);
  EXPECT_NEAR(sym_c.bound, -2.20337657180259, 1e-12);
}

TEST(Thm6, RejectsBadWeights) {
  const FunctionalValues f = FunctionalValues::from_values({1, 2, 3, 4});
  EXPECT_THROW(thm6_convex_combination(star4(), f, f, 1, 0, kHalf, Variant::kLiteral, false),
               DomainError);
  EXPECT_THROW(thm6_convex_combination(star4(), f, FunctionalValues::from_values({1, 2}), 1, 1,
                                       kHalf, Variant::kLiteral, false),
               DomainError);
}

TEST(ClassForms, StarClosedForms) {
  const auto reports = class_closed_forms(GraphClass::kStar, 4, 2.0);
  bool saw_exact = false;
  for (const auto& r : reports) {
    if (r.theorem == TheoremId::kStarRenyiExact) {
      saw_exact = true;
      EXPECT_NEAR(r.bound, 4.0 - std::log2(10.0), 1e-12);
      EXPECT_TRUE(r.holds());
    }
    if (r.theorem == TheoremId::kStarShannonExact) {
      EXPECT_NEAR(r.bound, 0.811278124459133, 1e-12);
      EXPECT_TRUE(r.holds());
    }
  }
  EXPECT_TRUE(saw_exact);
  for (auto [n, a, expected] : {std::tuple{5, 0.5, 0.84799690655495},
                                std::tuple{5, 3.0, 0.471708235816816},
                                std::tuple{10, 0.5, 0.678071905112638},
                                std::tuple{10, 3.0, 0.227015815447354}}) {
    for (const auto& r : class_closed_forms(GraphClass::kStar, n, a)) {
      if (r.theorem == TheoremId::kStarRenyiExact) { EXPECT_NEAR(r.bound, expected, 1e-12); }
    }
  }
}

TEST(ClassForms, WheelMatchesStarFromFive) {
  for (const auto& r : class_closed_forms(GraphClass::kWheel, 7, 3.0)) {
    if (r.direction == Direction::kExact) { EXPECT_TRUE(r.holds()); }
  }
  for (const auto& r : class_closed_forms(GraphClass::kWheel, 4, 3.0)) {
    EXPECT_FALSE(r.precondition_met);
    EXPECT_FALSE(r.note.empty());
  }
}

TEST(ClassForms, StarRenyiBoundVariants) {
  // k = 2 and rho = n - 1: the S_10 orbit distribution is (0.1, 0.9).
  for (const auto& r : class_closed_forms(GraphClass::kStar, 10, kHalf)) {
    if (r.theorem != TheoremId::kStarRenyiBound) continue;
    if (r.variant == Variant::kLiteral) {
      EXPECT_NEAR(r.bound, kBelowOneLiteral, 1e-12);
      EXPECT_TRUE(r.violated());
    } else {
      EXPECT_NEAR(r.bound, kBelowOneCorrected, 1e-11);
      EXPECT_TRUE(r.holds());
    }
  }
}

TEST(ClassForms, StarFunctionalBound) {
  const auto fv = FunctionalValues::from_values({6, 4, 4, 4});
  for (const auto& r : class_closed_forms(GraphClass::kStar, 4, kHalf, fv)) {
    if (r.theorem != TheoremId::kStarFunctionalBound) continue;
    EXPECT_TRUE(r.precondition_met);
    EXPECT_EQ(r.direction, Direction::kLower);
    EXPECT_NEAR(r.bound, 2.0 * std::log2(1.0 + std::sqrt(3.0)) - std::log2(18.0), 1e-12);
    EXPECT_TRUE(r.holds());
  }
  const auto ones = FunctionalValues::from_values({1, 1, 1, 1});
  for (const auto& r : class_closed_forms(GraphClass::kStar, 4, kHalf, ones)) {
    if (r.theorem == TheoremId::kStarFunctionalBound) { EXPECT_FALSE(r.precondition_met); }
  }
}

TEST(ClassForms, PathExamples) {
  for (double a : {0.25, 0.5, 2.0, 3.0}) {
    const auto reports = class_closed_forms(GraphClass::kPath, 6, a);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_NEAR(reports[0].bound, 1.58496250072116, 1e-12);
    EXPECT_NEAR(reports[0].lhs, std::log2(3.0), 1e-12);
    EXPECT_TRUE(reports[0].holds());
  }
  const auto fv = FunctionalValues::from_values(std::vector<double>(6, 3.0));
  const auto reports = class_closed_forms(GraphClass::kPath, 6, kHalf, fv);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[1].theorem, TheoremId::kPathFunctionalBound);
  EXPECT_NEAR(reports[1].bound, 0.0, 1e-12);
  EXPECT_NEAR(reports[1].lhs, std::log2(6.0), 1e-12);
  EXPECT_TRUE(reports[1].holds());

  const auto odd = class_closed_forms(GraphClass::kPath, 5, kHalf);
  EXPECT_NEAR(odd[0].bound, 1.55157549599229, 1e-12);
  EXPECT_TRUE(odd[0].holds());
}

TEST(ClassForms, Errors) {
  EXPECT_THROW(class_closed_forms(GraphClass::kCycle, 5, kHalf), DomainError);
  EXPECT_THROW(class_closed_forms(GraphClass::kStar, 2, kHalf), DomainError);
  EXPECT_THROW(class_closed_forms(GraphClass::kStar, 4, kHalf,
                                  FunctionalValues::from_values({1, 2})),
               DomainError);
}

TEST(Connected, Examples) {
  const BoundReport r = connected_functional_bounds(star4(), FunctionalSpec::linear({2, 1}),
                                                    kHalf, Variant::kLiteral);
  EXPECT_EQ(r.direction, Direction::kTwoSided);
  EXPECT_NEAR(*r.lower_bound, 1.0, 1e-15);
  EXPECT_NEAR(r.bound, 3.0, 1e-15);
  EXPECT_NEAR(r.lhs, 1.98780344045185, 1e-12);
  EXPECT_TRUE(r.holds());

  const Graph c6 = generate_graph(GraphClass::kPath, 6);
  const BoundReport eq = connected_functional_bounds(
      c6, FunctionalSpec::linear(std::vector<double>(5, 2.0)), 3.0, Variant::kLiteral);
  EXPECT_NEAR(eq.bound, std::log2(6.0), 1e-12);
  EXPECT_NEAR(*eq.lower_bound, std::log2(6.0), 1e-12);
  EXPECT_TRUE(eq.holds());

  const Graph p3 = generate_graph(GraphClass::kPath, 3);
  const BoundReport ex = connected_functional_bounds(p3, FunctionalSpec::exponential(2.0, {1, 1}),
                                                     kHalf, Variant::kLiteral);
  EXPECT_EQ(ex.params.at("X"), 0.0);
  EXPECT_NEAR(ex.bound, std::log2(3.0), 1e-12);
  EXPECT_TRUE(ex.holds());
}

TEST(Connected, BetaBelowOne) {
  const BoundReport lit = connected_functional_bounds(
      star4(), FunctionalSpec::exponential(0.5, {2, 1}), kHalf, Variant::kLiteral);
  EXPECT_FALSE(lit.precondition_met);
  const BoundReport cor = connected_functional_bounds(
      star4(), FunctionalSpec::exponential(0.5, {2, 1}), kHalf, Variant::kCorrected);
  EXPECT_TRUE(cor.precondition_met);
  EXPECT_TRUE(cor.holds());
  EXPECT_THROW(connected_functional_bounds(Graph(3, {{0, 1}}), FunctionalSpec::linear(), kHalf,
                                           Variant::kLiteral),
               DomainError);
}

// --- properties -----------------------------------------------------------

namespace {

// Independent straight-line bounds in linear space.
double direct_thm1(const std::vector<double>& p, double a, Variant v, bool eps) {
  const double n = static_cast<double>(p.size());
  const double r = oracle::rho(p);
  double factor;
  if (v == Variant::kCorrected) {
    factor = std::pow(r, std::abs(a - 2.0));
  } else {
    factor = a < 1.0 ? std::pow(r, a - 2.0) : 1.0 / std::pow(r, a - 2.0);
  }
  const double e = oracle::epsilon(p);
  const double e2 = eps && (v == Variant::kCorrected || a < 1.0) ? e * e : 1.0;
  const double h = oracle::shannon(p);
  return a < 1.0 ? h + n * (n - 1.0) * (1.0 - a) * e2 * factor / (2.0 * kLn2)
                 : h - (a - 1.0) * n * (n - 1.0) * e2 * factor / (2.0 * kLn2);
}

double direct_slack(Direction dir, double lhs, double bound) {
  return dir == Direction::kUpper ? bound - lhs : lhs - bound;
}

}  // namespace

TEST(Properties, SoundBoundsHoldOnRandomDistributions) {
  oracle::Rng rng(500);
  const std::vector<double> alphas = {0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1.01, 1.1, 1.5, 2.0, 2.5, 3.0, 6.0};
  for (int t = 0; t < 600; ++t) {
    const auto p = oracle::random_distribution(rng, 1 + t % 10, 0.5 + (t % 7));
    const Distribution d(p);
    for (double a : alphas) {
      const BoundReport j = jensen_gap_bound(d, a);
      EXPECT_FALSE(j.violated()) << "jensen a=" << a;
      for (bool eps : {false, true}) {
        const auto reps = thm1_renyi_shannon_bounds(d, a, Variant::kCorrected, eps);
        EXPECT_TRUE(reps[0].holds()) << "ordering a=" << a;
        EXPECT_TRUE(reps[1].holds()) << "corrected a=" << a << " eps=" << eps;
      }
    }
  }
}

TEST(Properties, SlackMatchesStraightLineEvaluation) {
  oracle::Rng rng(501);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 8;
    const auto p = oracle::random_distribution(rng, n, 3.0);
    const auto q = oracle::random_distribution(rng, n, 3.0);
    const Distribution d(p);
    const Distribution d2(q);
    for (double a : {0.25, 0.75, 1.5, 3.0}) {
      for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
        for (bool eps : {false, true}) {
          const BoundReport r = thm1_renyi_shannon_bounds(d, a, v, eps)[1];
          const double lhs = oracle::renyi(p, a);
          const double bound = direct_thm1(p, a, v, eps);
          EXPECT_NEAR(r.slack, direct_slack(r.direction, lhs, bound),
                      1e-9 * std::max(1.0, std::abs(bound)));
        }
      }
      // thm4 with the tightest psi.
      double psi = 0.0;
      for (std::size_t i = 0; i < n; ++i) psi = std::max(psi, p[i] / q[i]);
      const BoundReport r4 = thm4_scaled_dominance(d, d2, psi, a);
      const double b4 = a < 1.0 ? oracle::renyi(q, a) + a / (1.0 - a) * std::log2(psi)
                                : oracle::renyi(q, a) - a / (a - 1.0) * std::log2(psi);
      EXPECT_TRUE(r4.precondition_met);
      EXPECT_NEAR(r4.slack, direct_slack(r4.direction, oracle::renyi(p, a), b4), 1e-9);
      EXPECT_TRUE(r4.holds());

      // thm5 with the tightest phi.
      double phi = 1e-12;
      for (std::size_t i = 0; i < n; ++i) phi = std::max(phi, p[i] - q[i]);
      for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
        const BoundReport r5 = thm5_additive_dominance(d, d2, phi, a, v);
        const double corr = v == Variant::kCorrected ? 1.0 / kLn2 : 1.0;
        const double nn = static_cast<double>(n);
        const double b5 =
            a < 1.0 ? oracle::renyi(q, a) + corr * nn * std::pow(phi, a) /
                                                   oracle::power_sum(q, a) / (1.0 - a)
                    : oracle::renyi(q, a) - corr * a / (a - 1.0) * std::pow(nn, 1.0 / a) * phi /
                                                   std::pow(oracle::power_sum(q, a), 1.0 / a);
        EXPECT_NEAR(r5.slack, direct_slack(r5.direction, oracle::renyi(p, a), b5),
                    1e-9 * std::max(1.0, std::abs(b5)));
        if (v == Variant::kCorrected) { EXPECT_TRUE(r5.holds()); }
      }
    }
  }
}

TEST(Properties, Thm6CorrectedHoldsAndMatchesDirectFormula) {
  oracle::Rng rng(502);
  std::uniform_real_distribution<double> val(0.1, 10.0);
  std::uniform_real_distribution<double> weight(0.2, 3.0);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + t % 9;
    std::vector<double> f1(n), f2(n);
    for (auto& x : f1) x = val(rng);
    for (auto& x : f2) x = val(rng);
    const double c1 = weight(rng), c2 = weight(rng);
    const Graph g(n, std::span<const Edge>{});
    const auto fv1 = FunctionalValues::from_values(f1);
    const auto fv2 = FunctionalValues::from_values(f2);
    for (double a : {0.25, 0.5, 0.9, 1.1, 2.0, 3.0}) {
      // Direct evaluation of the non-symmetric form.
      double s1 = 0, s2 = 0;
      for (std::size_t i = 0; i < n; ++i) { s1 += f1[i]; s2 += f2[i]; }
      std::vector<double> comb(n), p1(n), p2(n);
      for (std::size_t i = 0; i < n; ++i) {
        comb[i] = c1 * f1[i] + c2 * f2[i];
        p1[i] = f1[i] / s1;
        p2[i] = f2[i] / s2;
      }
      const auto pc = oracle::normalize(comb);
      const double A1 = c1 * s1 / (c1 * s1 + c2 * s2);
      const double A2 = 1.0 - A1;
      const double P1 = oracle::power_sum(p1, a), P2 = oracle::power_sum(p2, a);
      for (Variant v : {Variant::kLiteral, Variant::kCorrected}) {
        const double corr = v == Variant::kCorrected ? 1.0 / kLn2 : 1.0;
        const double bound =
            a < 1.0 ? oracle::renyi(p1, a) + a / (1.0 - a) * std::log2(A1) +
                          corr * std::pow(A2 / A1, a) * P2 / P1 / (1.0 - a)
                    : oracle::renyi(p1, a) - a / (a - 1.0) * std::log2(A1) -
                          corr * a / (a - 1.0) * (A2 / A1) * std::pow(P2 / P1, 1.0 / a);
        const BoundReport r = thm6_convex_combination(g, fv1, fv2, c1, c2, a, v, false);
        EXPECT_NEAR(r.slack, direct_slack(r.direction, oracle::renyi(pc, a), bound),
                    1e-9 * std::max(1.0, std::abs(bound)));
        if (v == Variant::kCorrected) {
          EXPECT_TRUE(r.holds());
          EXPECT_TRUE(thm6_convex_combination(g, fv1, fv2, c1, c2, a, v, true).holds());
        }
      }
    }
  }
}

TEST(Properties, Thm3And4HoldOnGraphs) {
  oracle::Rng rng(503);
  std::uniform_real_distribution<double> coef(0.5, 2.0);
  for (int t = 0; t < 150; ++t) {
    const Graph g = oracle::random_connected_graph(rng, 3 + t % 10, 0.2);
    const OrbitPartition part = vertex_orbits(g);
    std::vector<double> c(distance_matrix(g).diameter());
    for (double& x : c) x = coef(rng);
    std::vector<double> c_big = c;
    for (double& x : c_big) x *= 1.0 + coef(rng) / 4.0;
    const auto f1 = linear_functional_values(g, FunctionalSpec::linear(c));
    const auto f2 = linear_functional_values(g, FunctionalSpec::linear(c_big));
    for (double a : {0.25, 0.5, 0.75, 0.9, 1.1, 1.5, 2.0, 3.0}) {
      const auto r3 = thm3_partition_vs_functional(g, part, f1, a);
      EXPECT_FALSE(r3.violated());
      const auto r4 = thm4_corollary(f1, f2, a);
      EXPECT_TRUE(r4.precondition_met);
      EXPECT_TRUE(r4.holds());
    }
  }
}
