#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qgames/equilibrium_search.hpp"
#include "qgames/private_info.hpp"
#include "qgames/properties.hpp"
#include "qgames/scenarios.hpp"

namespace qgames {
namespace {

TEST(PrivateInfoGame, ValidatesPriorAndTables) {
  const BimatrixGame t({"H", "T"}, {"H", "T"}, {{0, 0}, {1, 1}, {1, 1}, {0, 0}});
  EXPECT_THROW(PrivateInfoGame({"C"}, {"C"}, {0.5}, {t}), std::invalid_argument);
  EXPECT_THROW(PrivateInfoGame({"C", "D"}, {"C"}, {0.5, 0.5}, {t}), std::invalid_argument);
  EXPECT_THROW(PrivateInfoGame({"C", "D"}, {"C"}, {1.5, -0.5}, {t, t}), std::invalid_argument);
  const BimatrixGame other({"L", "H"}, {"L", "H"}, {{0, 0}, {1, 1}, {1, 1}, {0, 0}});
  EXPECT_THROW(PrivateInfoGame({"C", "D"}, {"C"}, {0.5, 0.5}, {t, other}), std::invalid_argument);
  const PrivateInfoGame g({"C", "D"}, {"C"}, {0.25, 0.75}, {t, t});
  EXPECT_DOUBLE_EQ(g.signal_marginal(Player::kTwo, 0), 1.0);
  EXPECT_DOUBLE_EQ(g.signal_marginal(Player::kOne, 1), 0.75);
}

TEST(ContingentStrategies, MixedRadixOrder) {
  const auto f = enumerate_contingent_strategies(2, 3);
  ASSERT_EQ(f.size(), 9u);
  EXPECT_EQ(f[1], (ContingentStrategy{0, 1}));
  EXPECT_EQ(f[3], (ContingentStrategy{1, 0}));
  EXPECT_EQ(contingent_label(f[5], {"C", "D"}, {"a", "b", "c"}), "C:b|D:c");
  EXPECT_EQ(enumerate_contingent_strategies(1, 2).size(), 2u);
}

TEST(AssociatedGame, CatsDogsCeilingIsThreeQuarters) {
  const BimatrixGame sharp = associated_game(cats_dogs().game);
  ASSERT_EQ(sharp.rows(), 4u);
  ASSERT_EQ(sharp.cols(), 4u);
  double best = 0.0;
  for (const PayoffPair& p : sharp.payoffs()) {
    EXPECT_EQ(p.one, p.two);
    best = std::max(best, p.one);
  }
  EXPECT_EQ(best, 0.75);
  // Always YES against always YES loses only on (cat, cat).
  EXPECT_EQ(sharp.payoff(0, 0).one, 0.75);
}

TEST(PayoffStructure, RoundTripsThroughGame) {
  const PayoffStructure ps = airline_structure(AirlineParameters{});
  const auto back = PayoffStructure::from_game(ps.to_game());
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->both_c(), ps.both_c());
  EXPECT_EQ(back->any_d(), ps.any_d());

  // CD and DD tables differ, so there is no eight-constant form.
  const BimatrixGame t0({"H", "T"}, {"H", "T"}, {{0, 0}, {1, 1}, {1, 1}, {0, 0}});
  const BimatrixGame t1({"H", "T"}, {"H", "T"}, {{1, 1}, {0, 0}, {0, 0}, {1, 1}});
  const PrivateInfoGame mixed({"C", "D"}, {"C", "D"}, {0.25, 0.25, 0.25, 0.25}, {t0, t1, t1, t0});
  EXPECT_FALSE(PayoffStructure::from_game(mixed).has_value());
}

TEST(Balanced, CanonicalScenariosAndACounterexample) {
  EXPECT_TRUE(is_balanced(cats_dogs().structure));
  EXPECT_TRUE(is_balanced(airline().structure));
  const PayoffPair z{0, 0};
  EXPECT_FALSE(is_balanced(PayoffStructure({PayoffPair{1, 0}, z, z, z}, {z, z, z, z})));
  // Off-diagonal balance compares C+E with D+F.
  EXPECT_TRUE(is_balanced(PayoffStructure({z, PayoffPair{3, 1}, PayoffPair{0, 2}, z}, {z, z, z, z})));
  EXPECT_FALSE(is_balanced(PayoffStructure({z, PayoffPair{3, 1}, PayoffPair{0, 1}, z}, {z, z, z, z})));
}

TEST(BehavioralPayoff, PureMovesReproduceTheAssociatedGame) {
  for (const Scenario& sc : {cats_dogs(), airline()}) {
    const BimatrixGame sharp = associated_game(sc.game);
    const auto profiles = pure_behavioral_profiles(sc.game);
    ASSERT_EQ(profiles.size(), 16u);
    const auto sample = behavioral_payoff_sample(sc.game, TwoQubitState::maximally_entangled(), profiles);
    for (std::size_t k = 0; k < sample.size(); ++k) {
      EXPECT_NEAR(sample[k].one, sharp.payoffs()[k].one, 1e-12);
      EXPECT_NEAR(sample[k].two, sharp.payoffs()[k].two, 1e-12);
    }
  }
}

TEST(BehavioralPayoff, AgreesWithClosedFormOnBalancedStructures) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    // A+G = B+H and C+E = D+F in each table.
    auto table = [&]() {
      const double a = unif(rng), b = unif(rng), g = unif(rng), c = unif(rng), d = unif(rng), e = unif(rng);
      return std::array<PayoffPair, 4>{PayoffPair{a, b}, PayoffPair{c, d}, PayoffPair{e, c + e - d},
                                       PayoffPair{g, a + g - b}};
    };
    const PayoffStructure ps(table(), table());
    ASSERT_TRUE(is_balanced(ps, 1e-9));
    const double theta = std::uniform_real_distribution<double>(0.0, std::numbers::pi)(rng);
    const BehavioralProfile bp = ThetaProfile(theta).to_behavioral();
    const PayoffPair direct = behavioral_payoff(ps.to_game(), TwoQubitState::maximally_entangled(), bp);
    const std::array<SpecialUnitary, 2> u{bp.one[0].as_unitary(), bp.one[1].as_unitary()};
    const std::array<SpecialUnitary, 2> v{bp.two[0].as_unitary(), bp.two[1].as_unitary()};
    EXPECT_NEAR(direct.one, closed_form_payoff(ps, u, v, Player::kOne), 1e-10);
    EXPECT_NEAR(direct.two, closed_form_payoff(ps, u, v, Player::kTwo), 1e-10);
    EXPECT_NEAR(direct.one, direct.two, 1e-10);
  }
}

TEST(BehavioralPayoff, RejectsArityMismatch) {
  BehavioralProfile bp = ThetaProfile(0.3).to_behavioral();
  bp.two.pop_back();
  EXPECT_THROW(behavioral_payoff(cats_dogs().game, TwoQubitState::maximally_entangled(), bp), std::invalid_argument);
}

TEST(Kuhn, SeededRandomInstances) {
  const PropertyOutcome o = kuhn_property(60, 123);
  EXPECT_TRUE(o.passed()) << o.failures << " failures";
}

TEST(Kuhn, CatsDogsWithTwoIndependentCoins) {
  const Scenario sc = cats_dogs();
  const FiniteSampleSpace space = FiniteSampleSpace::uniform(4);
  const ClassicalEnvironment env(space, {RandomVariable("X", {0, 0, 1, 1}, 2)}, {RandomVariable("Y", {0, 1, 0, 1}, 2)});
  const KuhnConstruction k = kuhn_construction(sc.game, env);
  EXPECT_TRUE(k.maps_are_inverse);
  EXPECT_TRUE(k.payoffs_match);
  EXPECT_EQ(k.contingent_then_randomized.rows(), 16u);
  // A classical randomization of G# stays inside G#'s payoff hull.
  const BimatrixGame sharp = associated_game(sc.game);
  EXPECT_TRUE(is_stochastic_extension(sharp, k.contingent_then_randomized));
}

TEST(StochasticExtension, QuantumBehavioralGameEscapesTheHull) {
  const Scenario sc = cats_dogs();
  const BimatrixGame sharp = associated_game(sc.game);
  const std::vector<BehavioralProfile> profiles{ThetaProfile(std::numbers::pi / 8).to_behavioral()};
  const auto sample = behavioral_payoff_sample(sc.game, TwoQubitState::maximally_entangled(), profiles);
  const auto witness = first_extension_violation(sharp, sample);
  ASSERT_TRUE(witness.has_value());
  EXPECT_NEAR(sample[*witness].one, std::pow(std::cos(std::numbers::pi / 8), 2), 1e-12);
  EXPECT_FALSE(is_stochastic_extension(sharp, sample));
}

}  // namespace
}  // namespace qgames
