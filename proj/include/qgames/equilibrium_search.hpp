#pragma once

// Equilibrium search for balanced two-signal games played with the maximally
// entangled pair HH+TT: the one-parameter rotation family, realizability of
// disagreement quadruples, the reduced two-variable maximization, and
// deviation checks against pure and unitary alternatives.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgames/optimize.hpp"
#include "qgames/private_info.hpp"
#include "qgames/quantum_core.hpp"

namespace qgames {

/// Per-signal rotations U_C = M(-theta), U_D = M(theta), V_C = M(2 theta), V_D = M(0).
class ThetaProfile {
 public:
  explicit ThetaProfile(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("ThetaProfile: theta must be finite");
    const double period = 2.0 * std::numbers::pi;
    theta_ = std::fmod(std::fmod(theta, period) + period, period);
  }

  double theta() const { return theta_; }

  BehavioralProfile to_behavioral() const {
    BehavioralProfile bp;
    bp.one = {rotation(-theta_), rotation(theta_)};
    bp.two = {rotation(2.0 * theta_), rotation(0.0)};
    return bp;
  }

 private:
  double theta_ = 0.0;
};

/// Player `p`'s ex-ante payoff from the closed form for a two-signal structure
/// when all four moves are unitary and the state is HH+TT: in each signal pair
/// the coins agree with probability s(U V^T) and disagree with probability
/// t(U V^T), and each outcome in a class is equally likely.
inline double closed_form_payoff(const PayoffStructure& ps, const std::array<SpecialUnitary, 2>& u,
                                 const std::array<SpecialUnitary, 2>& v, Player p) {
  double total = 0.0;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const auto& t = ps.table(a, b);
      const SpecialUnitary uv = u[a] * v[b].transpose();
      const double agree = (t[0].of(p) + t[3].of(p)) / 2.0;
      const double disagree = (t[1].of(p) + t[2].of(p)) / 2.0;
      total += ps.prior()[2 * a + b] * (uv.agreement() * agree + uv.disagreement() * disagree);
    }
  }
  return total;
}

struct ThetaOptimum {
  double theta = 0.0;
  double value = 0.0;
};

struct ThetaSearchOptions {
  std::size_t grid_points = 10000;
  double tolerance = 1e-10;
};

/// Common payoff of the rotation family at `theta` (player one's payoff; the
/// two coincide for balanced structures).
inline double theta_payoff(const PrivateInfoGame& game, double theta) {
  return behavioral_payoff(game, TwoQubitState::maximally_entangled(), ThetaProfile(theta).to_behavioral()).one;
}

/// Best rotation-family profile of a balanced structure over theta in [0, pi)
/// (the payoff has period pi). Ties resolve to the smallest theta.
inline ThetaOptimum optimize_theta(const PayoffStructure& ps, const ThetaSearchOptions& options = {}) {
  if (!is_balanced(ps)) throw std::invalid_argument("optimize_theta: payoff structure is not balanced");
  const PrivateInfoGame game = ps.to_game();
  auto f = [&](double th) { return theta_payoff(game, th); };
  const ScalarMaximum m = grid_refine_maximize(f, 0.0, std::numbers::pi, options.grid_points, true, options.tolerance);
  // The payoff is a trigonometric polynomial in 2*theta of degree at most 3,
  // so Newton on its exact derivative pins theta far below the golden-section
  // resolution near a flat maximum.
  const TrigPolynomial poly = fit_trig_polynomial(f, std::numbers::pi, 32);
  double theta = polish_stationary_point(poly, m.argmax, 1e-4);
  theta = std::fmod(theta + std::numbers::pi, std::numbers::pi);
  const double value = f(theta);
  if (value + 1e-12 < m.value) return {m.argmax, m.value};
  return {theta, value};
}

/// Disagreement probabilities t(AS), t(BS), t(BT), t(AT) of four SU(2) matrices.
class CorrelationQuad {
 public:
  CorrelationQuad(double x, double y, double z, double w) : v_{x, y, z, w} {
    for (double e : v_) {
      if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("CorrelationQuad: entries must lie in [0, 1]");
    }
  }

  double x() const { return v_[0]; }
  double y() const { return v_[1]; }
  double z() const { return v_[2]; }
  double w() const { return v_[3]; }
  const std::array<double, 4>& values() const { return v_; }

 private:
  std::array<double, 4> v_;
};

/// (t(AS), t(BS), t(BT), t(AT)) with plain matrix products and t(U) = |U_01|^2.
inline CorrelationQuad correlation_quad(const SpecialUnitary& a, const SpecialUnitary& b,
                                        const SpecialUnitary& s, const SpecialUnitary& t) {
  auto clamp01 = [](double v) { return std::min(1.0, std::max(0.0, v)); };
  return CorrelationQuad(clamp01((a * s).disagreement()), clamp01((b * s).disagreement()),
                         clamp01((b * t).disagreement()), clamp01((a * t).disagreement()));
}

/// The same quadruple for a behavioral profile, read in the U V^T convention:
/// A = U_C, B = U_D, S = V_D^T, T = V_C^T, so that W is the both-C pair.
inline CorrelationQuad correlation_quad(const std::array<SpecialUnitary, 2>& u,
                                        const std::array<SpecialUnitary, 2>& v) {
  return correlation_quad(u[0], u[1], v[1].transpose(), v[0].transpose());
}

/// Whether the four disagreement probabilities around the cycle A-S-B-T-A can
/// be produced by measurements on an entangled pair. With correlations
/// c = 1 - 2t, the condition is |sum of arcsines with exactly one sign flipped| <= pi
/// for each of the four placements of the flipped sign.
inline bool quantum_feasible(const CorrelationQuad& quad, double slack = 1e-9) {
  std::array<double, 4> angle{};
  for (int i = 0; i < 4; ++i) angle[i] = std::asin(std::clamp(1.0 - 2.0 * quad.values()[i], -1.0, 1.0));
  for (int flip = 0; flip < 4; ++flip) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) sum += i == flip ? -angle[i] : angle[i];
    if (std::abs(sum) > std::numbers::pi + slack) return false;
  }
  return true;
}

/// |XY - X - Y - ZW + Z + W| <= 2 (sqrt(X - X^2) sqrt(Y - Y^2) + sqrt(Z - Z^2) sqrt(W - W^2)).
///
/// NOTE: not a realizability test. It rejects the realizable boundary point
/// X = Y = Z = sin^2(pi/8), W = sin^2(3 pi/8) (left side 0.6036, right side 0.5).
/// quantum_feasible is the criterion used throughout; this form is kept only so
/// the mismatch stays covered by a test.
inline bool satisfies_product_form_bound(const CorrelationQuad& quad) {
  const double x = quad.x(), y = quad.y(), z = quad.z(), w = quad.w();
  const double lhs = std::abs(x * y - x - y - z * w + z + w);
  const double rhs = 2.0 * (std::sqrt(x - x * x) * std::sqrt(y - y * y) + std::sqrt(z - z * z) * std::sqrt(w - w * w));
  return lhs <= rhs;
}

/// f = p W + q (X + Y + Z) + r.
struct ReducedObjective {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

/// Rearranges a structure's common payoff into reduced form, using
/// s = 1 - t per signal pair. Needs equal prior weight on CD, DC and DD.
inline ReducedObjective reduced_objective(const PayoffStructure& ps, Player player = Player::kOne) {
  const auto& pr = ps.prior();
  if (std::abs(pr[1] - pr[2]) > 1e-15 || std::abs(pr[1] - pr[3]) > 1e-15) {
    throw std::invalid_argument("reduced_objective: CD, DC and DD must be equally likely");
  }
  auto agree = [&](const std::array<PayoffPair, 4>& t) { return (t[0].of(player) + t[3].of(player)) / 2.0; };
  auto disagree = [&](const std::array<PayoffPair, 4>& t) { return (t[1].of(player) + t[2].of(player)) / 2.0; };
  return {pr[0] * (disagree(ps.both_c()) - agree(ps.both_c())),
          pr[1] * (disagree(ps.any_d()) - agree(ps.any_d())),
          pr[0] * agree(ps.both_c()) + 3.0 * pr[1] * agree(ps.any_d())};
}

struct ReducedOptimum {
  double x = 0.0;
  double w = 0.0;
  double theta = 0.0;
  double value = 0.0;
};

/// Maximizes p W + 3 q X + r over realizable quadruples with X = Y = Z, along
/// the curve X = sin^2(theta), W = sin^2(3 theta), theta in [0, pi/2].
inline ReducedOptimum reduced_maximize(const ReducedObjective& obj, const ThetaSearchOptions& options = {}) {
  if (!std::isfinite(obj.p) || !std::isfinite(obj.q) || !std::isfinite(obj.r)) {
    throw std::invalid_argument("reduced_maximize: coefficients must be finite");
  }
  auto f = [&](double th) {
    const double s1 = std::sin(th), s3 = std::sin(3.0 * th);
    return obj.p * s3 * s3 + 3.0 * obj.q * s1 * s1 + obj.r;
  };
  const ScalarMaximum m =
      grid_refine_maximize(f, 0.0, std::numbers::pi / 2.0, options.grid_points, false, options.tolerance);
  const double s1 = std::sin(m.argmax), s3 = std::sin(3.0 * m.argmax);
  return {s1 * s1, s3 * s3, m.argmax, m.value};
}

// ---------------------------------------------------------------------------
// Deviation checks.

struct DeviationRow {
  Player player = Player::kOne;
  std::size_t signal = 0;
  std::string signal_label;
  /// Conditional return of each pure strategy, by strategy index.
  std::array<double, 2> pure{};
  std::array<std::string, 2> pure_labels;
  /// Conditional return of the profile's own move.
  double equilibrium = 0.0;
  /// Best conditional return found by the multistart unitary search.
  double best_unitary = 0.0;
};

struct EquilibriumReport {
  double theta_star = 0.0;
  std::array<double, 2> value{};
  std::vector<DeviationRow> deviations;
  bool verdict = false;
};

struct VerifyOptions {
  std::uint64_t seed = 20111201;
  int starts = 200;
  double ascent_tolerance = 1e-8;
  double verdict_slack = 1e-6;
  std::array<std::string, 2> signal_labels{"C", "D"};
  std::array<std::string, 2> strategy_labels{"H", "T"};
};

namespace detail {

inline SpecialUnitary unitary_from_params(const std::vector<double>& x, std::size_t offset) {
  return SpecialUnitary::from_angles(x[offset], x[offset + 1], x[offset + 2]);
}

template <class URBG>
void push_haar_angles(std::vector<double>& x, URBG& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  x.push_back(phase(rng));
  x.push_back(phase(rng));
  x.push_back(std::acos(std::sqrt(unit(rng))));
}

}  // namespace detail

/// Checks that no player gains at any signal by switching to a pure strategy or
/// to another unitary (multistart coordinate ascent over the three SU(2) angles).
inline EquilibriumReport verify_equilibrium(const PayoffStructure& ps, const ThetaProfile& profile,
                                            const VerifyOptions& options = {}) {
  if (!is_balanced(ps)) throw std::invalid_argument("verify_equilibrium: payoff structure is not balanced");
  const PrivateInfoGame game = ps.to_game(options.signal_labels, options.strategy_labels);
  const TwoQubitState xi = TwoQubitState::maximally_entangled();
  const BehavioralProfile bp = profile.to_behavioral();
  const PayoffPair value = behavioral_payoff(game, xi, bp);

  EquilibriumReport report;
  report.theta_star = profile.theta();
  report.value = {value.one, value.two};
  report.verdict = true;
  std::mt19937_64 rng(options.seed);
  for (Player p : kPlayers) {
    for (std::size_t a = 0; a < 2; ++a) {
      DeviationRow row;
      row.player = p;
      row.signal = a;
      row.signal_label = options.signal_labels[a];
      row.pure_labels = options.strategy_labels;
      for (Side s : kSides) row.pure[index_of(s)] = conditional_payoff(game, xi, bp, p, a, PlayerMove(s));
      row.equilibrium = conditional_payoff(game, xi, bp, p, a, bp.moves(p)[a]);
      auto objective = [&](const std::vector<double>& x) {
        return conditional_payoff(game, xi, bp, p, a, PlayerMove(detail::unitary_from_params(x, 0)));
      };
      row.best_unitary = -INFINITY;
      for (int k = 0; k < options.starts; ++k) {
        std::vector<double> x0;
        detail::push_haar_angles(x0, rng);
        const auto r = coordinate_ascent(objective, std::move(x0), options.ascent_tolerance);
        row.best_unitary = std::max(row.best_unitary, r.value);
      }
      const double best_alt = std::max({row.pure[0], row.pure[1], row.best_unitary});
      if (row.equilibrium < best_alt - options.verdict_slack) report.verdict = false;
      report.deviations.push_back(std::move(row));
    }
  }
  return report;
}

struct UnrestrictedSearchResult {
  double value = -INFINITY;
  std::array<SpecialUnitary, 2> u{SpecialUnitary::identity(), SpecialUnitary::identity()};
  std::array<SpecialUnitary, 2> v{SpecialUnitary::identity(), SpecialUnitary::identity()};
};

/// Multistart coordinate ascent of player one's payoff over all four per-signal
/// unitaries (12 angles), without the rotation-family restriction.
inline UnrestrictedSearchResult maximize_unrestricted(const PayoffStructure& ps, int starts, std::uint64_t seed,
                                                      double tol = 1e-8) {
  const PrivateInfoGame game = ps.to_game();
  const TwoQubitState xi = TwoQubitState::maximally_entangled();
  auto objective = [&](const std::vector<double>& x) {
    BehavioralProfile bp;
    bp.one = {detail::unitary_from_params(x, 0), detail::unitary_from_params(x, 3)};
    bp.two = {detail::unitary_from_params(x, 6), detail::unitary_from_params(x, 9)};
    return behavioral_payoff(game, xi, bp).one;
  };
  std::mt19937_64 rng(seed);
  UnrestrictedSearchResult best;
  for (int k = 0; k < starts; ++k) {
    std::vector<double> x0;
    for (int m = 0; m < 4; ++m) detail::push_haar_angles(x0, rng);
    const auto r = coordinate_ascent(objective, std::move(x0), tol);
    if (r.value > best.value) {
      best.value = r.value;
      best.u = {detail::unitary_from_params(r.x, 0), detail::unitary_from_params(r.x, 3)};
      best.v = {detail::unitary_from_params(r.x, 6), detail::unitary_from_params(r.x, 9)};
    }
  }
  return best;
}

}  // namespace qgames
