#pragma once

// Seeded randomized property checks over the quantum and classical layers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qgames/classical_games.hpp"
#include "qgames/equilibrium_search.hpp"
#include "qgames/private_info.hpp"
#include "qgames/quantum_core.hpp"

namespace qgames {

struct PropertyOutcome {
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest observed deviation from the property (or slack used, per check).
  double worst = 0.0;

  bool passed() const { return trials > 0 && failures == 0; }
};

/// Each player's outcome marginal under (U, V) on a random state does not
/// depend on the opponent's unitary.
inline PropertyOutcome no_signaling_check(std::size_t trials, std::uint64_t seed, double tol = 1e-12) {
  std::mt19937_64 rng(seed);
  PropertyOutcome out;
  for (std::size_t k = 0; k < trials; ++k) {
    const TwoQubitState xi = random_state(rng);
    const SpecialUnitary u = random_special_unitary(rng), v = random_special_unitary(rng);
    const SpecialUnitary u2 = random_special_unitary(rng), v2 = random_special_unitary(rng);
    const auto base = outcome_distribution(xi, u, v);
    const auto other_v = outcome_distribution(xi, u, v2);
    const auto other_u = outcome_distribution(xi, u2, v);
    double dev = 0.0;
    for (Side s : kSides) {
      dev = std::max(dev, std::abs(base.marginal_one(s) - other_v.marginal_one(s)));
      dev = std::max(dev, std::abs(base.marginal_two(s) - other_u.marginal_two(s)));
    }
    ++out.trials;
    out.worst = std::max(out.worst, dev);
    if (dev > tol) ++out.failures;
  }
  return out;
}

/// Disagreement quads of Haar-random (A, B, S, T) satisfy the arcsine condition.
/// `worst` is the largest excess of an arcsine sum over pi.
inline PropertyOutcome landau_forward_check(std::size_t trials, std::uint64_t seed, double slack = 1e-9) {
  std::mt19937_64 rng(seed);
  PropertyOutcome out;
  out.worst = -INFINITY;
  for (std::size_t k = 0; k < trials; ++k) {
    const SpecialUnitary a = random_special_unitary(rng), b = random_special_unitary(rng);
    const SpecialUnitary s = random_special_unitary(rng), t = random_special_unitary(rng);
    const CorrelationQuad quad = correlation_quad(a, b, s, t);
    std::array<double, 4> angle{};
    for (int i = 0; i < 4; ++i) angle[i] = std::asin(std::clamp(1.0 - 2.0 * quad.values()[i], -1.0, 1.0));
    for (int flip = 0; flip < 4; ++flip) {
      double sum = 0.0;
      for (int i = 0; i < 4; ++i) sum += i == flip ? -angle[i] : angle[i];
      out.worst = std::max(out.worst, std::abs(sum) - std::numbers::pi);
    }
    ++out.trials;
    if (!quantum_feasible(quad, slack)) ++out.failures;
  }
  return out;
}

/// On HH+TT, replying conj(U) to U never produces a mismatch, and replying
/// with the swap of conj(U) never produces a match.
inline PropertyOutcome diagonal_forcing_check(std::size_t trials, std::uint64_t seed, double tol = 1e-12) {
  std::mt19937_64 rng(seed);
  const TwoQubitState xi = TwoQubitState::maximally_entangled();
  PropertyOutcome out;
  for (std::size_t k = 0; k < trials; ++k) {
    const SpecialUnitary u = random_special_unitary(rng);
    const auto diag = outcome_distribution(xi, u, diagonal_forcing_reply(u));
    const auto off = outcome_distribution(xi, u, off_diagonal_forcing_reply(u));
    const double dev = std::max({diag.at(Side::H, Side::T), diag.at(Side::T, Side::H), off.at(Side::H, Side::H),
                                 off.at(Side::T, Side::T)});
    ++out.trials;
    out.worst = std::max(out.worst, dev);
    if (dev > tol) ++out.failures;
  }
  return out;
}

struct KuhnInstance {
  PrivateInfoGame game;
  ClassicalEnvironment environment;
};

/// 1-2 signals and 2 strategies per player, a random prior, integer payoffs
/// in [-5, 5], and 1-2 random variables per player on 2-4 atoms.
template <class URBG>
KuhnInstance random_kuhn_instance(URBG& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::size_t s1 = std::size_t(pick(1, 2)), s2 = std::size_t(pick(1, 2));
  std::vector<std::string> sig1, sig2;
  for (std::size_t i = 0; i < s1; ++i) sig1.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < s2; ++i) sig2.push_back("b" + std::to_string(i));

  std::vector<double> prior(s1 * s2);
  double total = 0.0;
  for (double& p : prior) total += (p = double(pick(1, 4)));
  for (double& p : prior) p /= total;

  std::vector<BimatrixGame> stages;
  for (std::size_t k = 0; k < s1 * s2; ++k) {
    std::vector<PayoffPair> cells;
    for (int c = 0; c < 4; ++c) cells.push_back({double(pick(-5, 5)), double(pick(-5, 5))});
    stages.emplace_back(std::vector<std::string>{"H", "T"}, std::vector<std::string>{"H", "T"}, std::move(cells));
  }

  const std::size_t atoms = std::size_t(pick(2, 4));
  std::vector<double> weights(atoms);
  total = 0.0;
  for (double& w : weights) total += (w = double(pick(1, 3)));
  for (double& w : weights) w /= total;
  FiniteSampleSpace space(weights);

  auto variables = [&](const char* prefix) {
    std::vector<RandomVariable> vars;
    const int n = pick(1, 2);
    for (int v = 0; v < n; ++v) {
      std::vector<std::size_t> values(atoms);
      for (auto& x : values) x = std::size_t(pick(0, 1));
      vars.emplace_back(std::string(prefix) + std::to_string(v), std::move(values), 2);
    }
    return vars;
  };
  auto vars1 = variables("X");
  auto vars2 = variables("Y");
  return {PrivateInfoGame(std::move(sig1), std::move(sig2), std::move(prior), std::move(stages)),
          ClassicalEnvironment(std::move(space), std::move(vars1), std::move(vars2))};
}

inline PropertyOutcome kuhn_property(std::size_t instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyOutcome out;
  for (std::size_t k = 0; k < instances; ++k) {
    const KuhnInstance inst = random_kuhn_instance(rng);
    ++out.trials;
    if (!kuhn_check(inst.game, inst.environment)) ++out.failures;
  }
  return out;
}

/// The unrestricted 12-angle search cannot beat the rotation-family optimum.
/// `worst` is the best unrestricted value minus the optimum.
inline PropertyOutcome multistart_ceiling_check(const PayoffStructure& ps, int starts, std::uint64_t seed,
                                                double slack = 1e-6) {
  const ThetaOptimum opt = optimize_theta(ps);
  const UnrestrictedSearchResult r = maximize_unrestricted(ps, starts, seed);
  PropertyOutcome out;
  out.trials = std::size_t(starts);
  out.worst = r.value - opt.value;
  if (out.worst > slack) out.failures = 1;
  return out;
}

}  // namespace qgames
