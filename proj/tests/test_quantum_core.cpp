#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qgames/properties.hpp"
#include "qgames/quantum_core.hpp"

namespace qgames {
namespace {

using std::numbers::pi;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

Mat2 dense(const SpecialUnitary& u) { return {{{u.at(0, 0), u.at(0, 1)}, {u.at(1, 0), u.at(1, 1)}}}; }

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Independent oracle: (U kron V) applied to the amplitude vector over HH, HT, TH, TT.
std::array<Complex, 4> kron_apply(const SpecialUnitary& u, const SpecialUnitary& v, const std::array<Complex, 4>& x) {
  std::array<Complex, 4> y{};
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) y[2 * i1 + i2] += u.at(i1, j1) * v.at(i2, j2) * x[2 * j1 + j2];
  return y;
}

TEST(SpecialUnitary, RejectsEntriesOffTheUnitSphere) {
  EXPECT_THROW(SpecialUnitary(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(SpecialUnitary(0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(SpecialUnitary(Complex(NAN, 0.0), 0.0), std::invalid_argument);
  EXPECT_NO_THROW(SpecialUnitary(Complex(0.6, 0.0), Complex(0.0, 0.8)));
}

TEST(SpecialUnitary, RotationMatchesCosSin) {
  const SpecialUnitary m = rotation(pi / 8);
  EXPECT_NEAR(m.at(0, 0).real(), std::cos(pi / 8), 1e-15);
  EXPECT_NEAR(m.at(0, 1).real(), std::sin(pi / 8), 1e-15);
  EXPECT_NEAR(m.at(1, 0).real(), -std::sin(pi / 8), 1e-15);
  EXPECT_THROW(rotation(INFINITY), std::invalid_argument);
}

TEST(SpecialUnitary, ProductAndAdjointAgreeWithDenseAlgebra) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const SpecialUnitary a = random_special_unitary(rng), b = random_special_unitary(rng);
    const Mat2 want = multiply(dense(a), dense(b));
    const SpecialUnitary got = a * b;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) EXPECT_LT(std::abs(got.at(i, j) - want[i][j]), 1e-13);
    EXPECT_TRUE((a * a.adjoint()).approx_equal(SpecialUnitary::identity()));
    EXPECT_TRUE(a.transpose().transpose().approx_equal(a));
  }
}

TEST(SpecialUnitary, HaarSamplerHasUniformAgreement) {
  // Under Haar measure |p|^2 is uniform on [0, 1]: mean 1/2, second moment 1/3.
  std::mt19937_64 rng(7);
  double m1 = 0.0, m2 = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double a = random_special_unitary(rng).agreement();
    m1 += a;
    m2 += a * a;
  }
  EXPECT_NEAR(m1 / n, 0.5, 5e-3);
  EXPECT_NEAR(m2 / n, 1.0 / 3.0, 5e-3);
}

TEST(TwoQubitState, NormalizesAndComparesRays) {
  const TwoQubitState xi(2.0, 0.0, 0.0, 2.0);
  EXPECT_NEAR(std::abs(xi.hh()), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(xi.same_state(TwoQubitState::maximally_entangled().scaled(Complex(0.0, -3.0))));
  EXPECT_FALSE(xi.same_state(TwoQubitState(1.0, 0.0, 0.0, -1.0)));
  EXPECT_THROW(TwoQubitState(0.0, 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST(ApplyPair, MatchesKroneckerOracle) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    const TwoQubitState xi = random_state(rng);
    const SpecialUnitary u = random_special_unitary(rng), v = random_special_unitary(rng);
    const auto want = kron_apply(u, v, xi.amplitudes());
    const auto got = apply_pair(xi, u, v).amplitudes();
    for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(got[i] - want[i]), 1e-13);
  }
}

TEST(OutcomeDistribution, RotationsOnEntangledPairDisagreeBySinSquaredOfDifference) {
  const TwoQubitState xi = TwoQubitState::maximally_entangled();
  for (double a : {-0.7, 0.0, 0.3, 1.1}) {
    for (double b : {-0.2, 0.5, 2.0}) {
      const auto d = outcome_distribution(xi, rotation(a), rotation(b));
      EXPECT_NEAR(d.disagreement(), std::pow(std::sin(a - b), 2), 1e-14);
      EXPECT_NEAR(d.hh(), d.tt(), 1e-14);
    }
  }
}

TEST(OutcomeDistribution, PureAgainstPureIsAPointMass) {
  const auto d = outcome_distribution(TwoQubitState::maximally_entangled(), Side::T, Side::H);
  EXPECT_EQ(d.th(), 1.0);
  EXPECT_EQ(d.hh() + d.ht() + d.tt(), 0.0);
}

TEST(OutcomeDistribution, UnitaryAgainstPureKeepsOnlyTheUnitaryCoinsMarginal) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const TwoQubitState xi = random_state(rng);
    const SpecialUnitary u = random_special_unitary(rng);
    const auto both = outcome_distribution(xi, u, SpecialUnitary::identity());
    const auto vs_t = outcome_distribution(xi, u, Side::T);
    EXPECT_NEAR(vs_t.th() + vs_t.hh() + vs_t.ht() + vs_t.tt(), 1.0, 1e-14);
    EXPECT_EQ(vs_t.hh(), 0.0);
    EXPECT_EQ(vs_t.th(), 0.0);
    EXPECT_NEAR(vs_t.ht(), both.marginal_one(Side::H), 1e-13);

    const auto h_vs = outcome_distribution(xi, Side::H, u);
    const auto both2 = outcome_distribution(xi, SpecialUnitary::identity(), u);
    EXPECT_NEAR(h_vs.hh(), both2.marginal_two(Side::H), 1e-13);
    EXPECT_EQ(h_vs.th() + h_vs.tt(), 0.0);
  }
}

TEST(OutcomeDistribution, NoSignaling) {
  const PropertyOutcome o = no_signaling_check(300, 11);
  EXPECT_TRUE(o.passed()) << "worst " << o.worst;
}

TEST(IsClassical, ProductStatesOnly) {
  EXPECT_FALSE(is_classical(TwoQubitState::maximally_entangled()));
  EXPECT_TRUE(is_classical(TwoQubitState::product(0.6, Complex(0.0, 0.8), 1.0, 2.0)));
  EXPECT_TRUE(is_classical(TwoQubitState(1.0, 0.0, 0.0, 0.0)));
  EXPECT_FALSE(is_classical(TwoQubitState(1.0, 1.0, 1.0, -1.0)));
}

TEST(ForcingReplies, DiagonalAndOffDiagonal) {
  const PropertyOutcome o = diagonal_forcing_check(300, 5);
  EXPECT_TRUE(o.passed()) << "worst " << o.worst;
}

TEST(ForcingReplies, ConjugateTimesSwapOnlyWorksForRealUnitaries) {
  // V = conj(U) J puts U V^T = U J^T U^dagger, which is off-diagonal only when
  // Im(p conj(q)) = 0. The reply J conj(U) works for every U.
  const TwoQubitState xi = TwoQubitState::maximally_entangled();
  const SpecialUnitary real = rotation(0.4);
  const auto d_real = outcome_distribution(xi, real, real.conjugate() * swap_unitary());
  EXPECT_NEAR(d_real.hh() + d_real.tt(), 0.0, 1e-15);

  const SpecialUnitary complex = SpecialUnitary::from_angles(0.3, 1.2, 0.7);
  const auto literal = outcome_distribution(xi, complex, complex.conjugate() * swap_unitary());
  EXPECT_GT(literal.hh() + literal.tt(), 0.1);
  const auto fixed = outcome_distribution(xi, complex, off_diagonal_forcing_reply(complex));
  EXPECT_NEAR(fixed.hh() + fixed.tt(), 0.0, 1e-15);
}

TEST(PlayerMove, Describes) {
  EXPECT_EQ(PlayerMove(Side::H).describe(), "pure H");
  EXPECT_TRUE(PlayerMove(rotation(0.1)).is_unitary());
}

}  // namespace
}  // namespace qgames
