#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qgames/scenarios.hpp"

namespace qgames {
namespace {

TEST(ParseRational, AcceptsIntegersDecimalsFractionsAndExponents) {
  EXPECT_EQ(parse_rational("49"), Rational(49));
  EXPECT_EQ(parse_rational("-3.25"), Rational(-13, 4));
  EXPECT_EQ(parse_rational("108/19"), Rational(108, 19));
  EXPECT_EQ(parse_rational("1e2"), Rational(100));
  EXPECT_EQ(parse_rational("2.5E-1"), Rational(1, 4));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("3x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(AirlineParameters, DefaultsGiveTheFourConstants) {
  const AirlineParameters p;
  EXPECT_EQ(p.a(), Rational(1));
  EXPECT_EQ(p.b(), Rational(50));
  EXPECT_EQ(p.c(), Rational(20));
  EXPECT_EQ(p.d(), Rational(60));
  EXPECT_EQ(p.high_demand_surplus(), Rational(178));
  EXPECT_NO_THROW(p.validate());
}

TEST(AirlineParameters, ParseAndValidate) {
  const AirlineParameters p = AirlineParameters::parse("49,19,1,108/19,48");
  EXPECT_EQ(p.high_price, Rational(108, 19));
  EXPECT_THROW(AirlineParameters::parse("1,2,3"), std::invalid_argument);
  EXPECT_THROW(AirlineParameters::parse("49,19,1,x,48"), std::invalid_argument);
  try {
    AirlineParameters::parse("49,19,1,3,48").validate();
    FAIL() << "expected B < D violation";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("B < D"), std::string::npos);
  }
  EXPECT_THROW(AirlineParameters::parse("19,49,1,6,48").validate(), std::invalid_argument);
  EXPECT_THROW(AirlineParameters::parse("49,19,0,6,48").validate(), std::invalid_argument);
}

TEST(BuildScenario, NamesAndParameters) {
  EXPECT_EQ(build_scenario("cats-dogs").signal_labels[0], "cat");
  EXPECT_EQ(build_scenario("airline").strategy_labels[1], "H");
  EXPECT_THROW(build_scenario("poker"), std::invalid_argument);
  EXPECT_THROW(build_scenario("cats_dogs", AirlineParameters{}), std::invalid_argument);
  for (const char* name : {"cats_dogs", "airline"}) EXPECT_TRUE(is_balanced(build_scenario(name).structure));
}

TEST(AirlineClassical, AlwaysLowIsTheUniqueEquilibrium) {
  const ClassicalEquilibrium eq = airline_classical_equilibrium(airline());
  EXPECT_EQ(eq.label_one, "N:L|P:L");
  EXPECT_EQ(eq.label_two, "N:L|P:L");
  EXPECT_EQ(eq.value[0], 15.25);
  EXPECT_TRUE(eq.strict_best_response);
  EXPECT_TRUE(eq.unique_correlated);
}

TEST(AirlineClassical, OtherParametersStillSolve) {
  // A = 10, B = 70, C = 30, D = 90.
  const Scenario sc = airline(AirlineParameters::parse("60,20,1,7,50"));
  const ClassicalEquilibrium eq = airline_classical_equilibrium(sc);
  EXPECT_EQ(eq.pure_equilibria, 1u);
  EXPECT_TRUE(eq.unique_correlated);
}

TEST(AirlineClassical, ThrowsWithoutAUniqueEquilibrium) {
  EXPECT_THROW(airline_classical_equilibrium(cats_dogs()), std::runtime_error);
}

TEST(Collusion, PooledPlanIsNotSelfEnforcing) {
  EXPECT_FALSE(is_pooled_plan_equilibrium(airline().structure, collusive_plan()));
  const PooledPlan all_low{{{0, 0}, {0, 0}, {0, 0}, {0, 0}}};
  EXPECT_TRUE(is_pooled_plan_equilibrium(airline().structure, all_low));
}

TEST(Welfare, ThreeRegimes) {
  const AirlineParameters p;
  const WelfareReport c = welfare_report(p, Regime::kClassical);
  EXPECT_EQ(c.consumer_surplus, 133.5);
  EXPECT_EQ(c.producer_surplus, 30.5);
  EXPECT_EQ(c.total, 164.0);
  const WelfareReport q = welfare_report(p, Regime::kQuantum);
  EXPECT_NEAR(q.consumer_surplus, 78.94, 0.01);
  EXPECT_NEAR(q.producer_surplus, 67.66, 0.01);
  EXPECT_NEAR(q.total, 146.6, 0.01);
  const WelfareReport k = welfare_report(p, Regime::kCollusion);
  EXPECT_EQ(k.consumer_surplus, 0.0);
  EXPECT_EQ(k.producer_surplus, 102.5);
}

TEST(Welfare, ProducerSurplusIsTwiceTheSymmetricPayoff) {
  const Scenario sc = airline();
  for (double theta : {0.1, 0.44, 1.0}) {
    const WelfareReport w = welfare_report(AirlineParameters{}, Regime::kQuantum, theta);
    const PayoffPair pay = behavioral_payoff(sc.game, TwoQubitState::maximally_entangled(),
                                             ThetaProfile(theta).to_behavioral());
    EXPECT_NEAR(w.producer_surplus, 2 * pay.one, 1e-9);
  }
}

TEST(Welfare, QuantumConsumerSurplusClosedForm) {
  // With theta*, high-demand customers lose only when both firms price high.
  const Scenario sc = airline();
  const double theta = optimize_theta(sc.structure).theta;
  const double x = std::pow(std::sin(theta), 2);
  // On NP, PN and PP the prices disagree with probability x, and agreement
  // splits evenly between (L,L) and (H,H), so (H,H) has mass (1 - x) / 2.
  const double want = 0.75 * 178 * (1 + x) / 2;
  EXPECT_NEAR(welfare_report(AirlineParameters{}, Regime::kQuantum).consumer_surplus, want, 1e-9);
}

TEST(Chsh, ChartAndChain) {
  const ChshChart c = chsh_chart();
  const double low = std::pow(std::sin(std::numbers::pi / 8), 2);
  EXPECT_NEAR(c.x_ne_y, low, 1e-12);
  EXPECT_NEAR(c.y_ne_z, low, 1e-12);
  EXPECT_NEAR(c.z_ne_w, low, 1e-12);
  EXPECT_NEAR(c.x_ne_w, 1 - low, 1e-12);
  EXPECT_TRUE(c.chain_violated);
  EXPECT_TRUE(chain_inequality_holds(0.1, 0.1, 0.1, 0.3));
  EXPECT_FALSE(chain_inequality_holds(0.1, 0.1, 0.1, 0.31));
}

}  // namespace
}  // namespace qgames
