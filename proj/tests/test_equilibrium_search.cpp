#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qgames/equilibrium_search.hpp"
#include "qgames/optimize.hpp"
#include "qgames/properties.hpp"
#include "qgames/scenarios.hpp"

namespace qgames {
namespace {

using std::numbers::pi;
const double kR79 = std::sqrt(79.0);

TEST(Optimize, GoldenSectionOnAParabola) {
  const auto m = golden_section_maximize([](double x) { return -(x - 1.3) * (x - 1.3) + 2.0; }, 0.0, 3.0, 1e-12);
  EXPECT_NEAR(m.argmax, 1.3, 1e-6);
  EXPECT_NEAR(m.value, 2.0, 1e-12);
}

TEST(Optimize, GridRefineBreaksTiesTowardSmallestArgument) {
  // cos(2x) peaks at 0 and pi on [0, 2 pi).
  const auto m = grid_refine_maximize([](double x) { return std::cos(2 * x); }, 0.0, 2 * pi, 1000, true);
  EXPECT_NEAR(m.argmax, 0.0, 1e-9);
  const auto shifted = grid_refine_maximize([](double x) { return std::cos(2 * (x - 0.5)); }, 0.0, 2 * pi, 1000, true);
  EXPECT_NEAR(shifted.argmax, 0.5, 1e-6);
  const auto flat = grid_refine_maximize([](double) { return 4.0; }, 1.0, 2.0, 10, false);
  EXPECT_EQ(flat.argmax, 1.0);
}

TEST(Optimize, TrigPolynomialFitIsExactForLowDegree) {
  auto f = [](double x) { return 0.3 + 2 * std::cos(2 * x) - std::sin(6 * x); };
  const TrigPolynomial t = fit_trig_polynomial(f, pi, 32);
  for (double x : {0.1, 0.7, 2.9}) {
    EXPECT_NEAR(t.derivative(x, 0), f(x), 1e-13);
    EXPECT_NEAR(t.derivative(x, 1), -4 * std::sin(2 * x) - 6 * std::cos(6 * x), 1e-12);
  }
}

TEST(ThetaProfile, NormalizesAndUsesTheRotationFamily) {
  EXPECT_NEAR(ThetaProfile(-pi / 8).theta(), 2 * pi - pi / 8, 1e-15);
  EXPECT_THROW(ThetaProfile(NAN), std::invalid_argument);
  const BehavioralProfile bp = ThetaProfile(0.2).to_behavioral();
  EXPECT_TRUE(bp.one[0].as_unitary().approx_equal(rotation(-0.2)));
  EXPECT_TRUE(bp.one[1].as_unitary().approx_equal(rotation(0.2)));
  EXPECT_TRUE(bp.two[0].as_unitary().approx_equal(rotation(0.4)));
  EXPECT_TRUE(bp.two[1].as_unitary().approx_equal(rotation(0.0)));
}

TEST(OptimizeTheta, CatsDogs) {
  const ThetaOptimum opt = optimize_theta(cats_dogs().structure);
  EXPECT_NEAR(opt.theta, pi / 8, 1e-9);
  EXPECT_NEAR(opt.value, std::pow(std::cos(pi / 8), 2), 1e-12);
}

TEST(OptimizeTheta, AirlineClosedForms) {
  const ThetaOptimum opt = optimize_theta(airline().structure);
  EXPECT_NEAR(opt.value, (3087 + 79 * kR79) / 112, 1e-9);
  EXPECT_NEAR(opt.theta, std::acos(0.5 * std::sqrt((14 + kR79) / 7)), 1e-9);
}

TEST(OptimizeTheta, RejectsUnbalanced) {
  const PayoffPair z{0, 0};
  EXPECT_THROW(optimize_theta(PayoffStructure({PayoffPair{1, 0}, z, z, z}, {z, z, z, z})), std::invalid_argument);
}

TEST(ReducedObjective, AirlineCoefficients) {
  const ReducedObjective r = reduced_objective(airline().structure);
  EXPECT_DOUBLE_EQ(r.p, 49.0 / 8);
  EXPECT_DOUBLE_EQ(r.q, -30.0 / 8);
  EXPECT_DOUBLE_EQ(r.r, 30.125);
  const ReducedOptimum m = reduced_maximize(r);
  EXPECT_NEAR(m.value, (3087 + 79 * kR79) / 112, 1e-9);
  EXPECT_NEAR(m.theta, optimize_theta(airline().structure).theta, 1e-6);
  EXPECT_NEAR(m.x, std::pow(std::sin(m.theta), 2), 1e-12);
  EXPECT_NEAR(m.w, std::pow(std::sin(3 * m.theta), 2), 1e-12);
}

TEST(ReducedObjective, CatsDogsMatchesTheta) {
  const ReducedOptimum m = reduced_maximize(reduced_objective(cats_dogs().structure));
  EXPECT_NEAR(m.value, std::pow(std::cos(pi / 8), 2), 1e-9);
  EXPECT_NEAR(m.theta, pi / 8, 1e-6);
}

TEST(ReducedObjective, NeedsEqualNonCCPriors) {
  const PayoffStructure cd = cats_dogs().structure;
  const PayoffStructure skewed(cd.both_c(), cd.any_d(), {0.4, 0.2, 0.2, 0.2});
  EXPECT_NO_THROW(reduced_objective(skewed));
  const PayoffStructure bad(cd.both_c(), cd.any_d(), {0.25, 0.5, 0.125, 0.125});
  EXPECT_THROW(reduced_objective(bad), std::invalid_argument);
}

TEST(QuantumFeasible, ArcsineBoundary) {
  const double x = std::pow(std::sin(pi / 8), 2), w = std::pow(std::sin(3 * pi / 8), 2);
  EXPECT_TRUE(quantum_feasible(CorrelationQuad(x, x, x, w)));
  EXPECT_FALSE(quantum_feasible(CorrelationQuad(0, 0, 0, 1)));
  // X = Y = Z = sin^2(t) allows W up to sin^2(3t) and no further.
  const double t = 0.3, xt = std::pow(std::sin(t), 2), wt = std::pow(std::sin(3 * t), 2);
  EXPECT_TRUE(quantum_feasible(CorrelationQuad(xt, xt, xt, wt)));
  EXPECT_FALSE(quantum_feasible(CorrelationQuad(xt, xt, xt, wt + 1e-4)));
  EXPECT_THROW(CorrelationQuad(0.5, 0.5, 0.5, 1.5), std::invalid_argument);
}

TEST(QuantumFeasible, PrintedProductFormRejectsTheRealizableOptimum) {
  const double x = std::pow(std::sin(pi / 8), 2), w = std::pow(std::sin(3 * pi / 8), 2);
  EXPECT_FALSE(satisfies_product_form_bound(CorrelationQuad(x, x, x, w)));
}

TEST(QuantumFeasible, HaarQuadsSatisfyArcsineCondition) {
  const PropertyOutcome o = landau_forward_check(2000, 31);
  EXPECT_TRUE(o.passed()) << "worst excess " << o.worst;
}

TEST(QuantumFeasible, ThetaProfileQuadMatchesCurve) {
  const BehavioralProfile bp = ThetaProfile(0.25).to_behavioral();
  const CorrelationQuad q = correlation_quad(std::array<SpecialUnitary, 2>{bp.one[0].as_unitary(), bp.one[1].as_unitary()},
                                             std::array<SpecialUnitary, 2>{bp.two[0].as_unitary(), bp.two[1].as_unitary()});
  const double x = std::pow(std::sin(0.25), 2);
  EXPECT_NEAR(q.x(), x, 1e-14);
  EXPECT_NEAR(q.y(), x, 1e-14);
  EXPECT_NEAR(q.z(), x, 1e-14);
  EXPECT_NEAR(q.w(), std::pow(std::sin(0.75), 2), 1e-14);
}

TEST(VerifyEquilibrium, CatsDogsOptimumHolds) {
  const EquilibriumReport rep = verify_equilibrium(cats_dogs().structure, ThetaProfile(pi / 8));
  EXPECT_TRUE(rep.verdict);
  ASSERT_EQ(rep.deviations.size(), 4u);
  for (const DeviationRow& d : rep.deviations) {
    EXPECT_LE(d.best_unitary, d.equilibrium + 1e-6);
    EXPECT_LE(std::max(d.pure[0], d.pure[1]), d.equilibrium);
  }
}

TEST(VerifyEquilibrium, OffOptimumProfileIsBeaten) {
  const EquilibriumReport rep = verify_equilibrium(cats_dogs().structure, ThetaProfile(0.2));
  EXPECT_FALSE(rep.verdict);
}

TEST(VerifyEquilibrium, AirlineDeviationTables) {
  const Scenario sc = airline();
  VerifyOptions vo;
  vo.signal_labels = sc.signal_labels;
  vo.strategy_labels = sc.strategy_labels;
  const EquilibriumReport rep = verify_equilibrium(sc.structure, ThetaProfile(optimize_theta(sc.structure).theta), vo);
  ASSERT_TRUE(rep.verdict);
  for (const DeviationRow& d : rep.deviations) {
    if (d.signal == 0) {
      EXPECT_EQ(d.signal_label, "N");
      EXPECT_NEAR(d.pure[0], 30.25, 1e-9);
      EXPECT_NEAR(d.pure[1], 15.0, 1e-9);
      EXPECT_NEAR(d.equilibrium, (181 + 7 * kR79) / 8, 1e-9);
    } else {
      EXPECT_NEAR(d.pure[0], 35.0, 1e-9);
      EXPECT_NEAR(d.pure[1], 30.0, 1e-9);
      EXPECT_NEAR(d.equilibrium, 32.5 + 15 * kR79 / 28, 1e-9);
    }
  }
}

TEST(VerifyEquilibrium, SeedMakesReportsReproducible) {
  VerifyOptions vo;
  vo.seed = 5;
  vo.starts = 20;
  const auto a = verify_equilibrium(cats_dogs().structure, ThetaProfile(pi / 8), vo);
  const auto b = verify_equilibrium(cats_dogs().structure, ThetaProfile(pi / 8), vo);
  for (std::size_t k = 0; k < a.deviations.size(); ++k) EXPECT_EQ(a.deviations[k].best_unitary, b.deviations[k].best_unitary);
}

TEST(UnrestrictedSearch, NeverBeatsTheRotationOptimum) {
  for (const Scenario& sc : {cats_dogs(), airline()}) {
    const PropertyOutcome o = multistart_ceiling_check(sc.structure, 30, 77);
    EXPECT_TRUE(o.passed()) << sc.name << " excess " << o.worst;
  }
}

}  // namespace
}  // namespace qgames
