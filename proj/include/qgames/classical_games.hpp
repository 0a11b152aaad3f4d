#pragma once

// Finite two-player games, classical environments on a finite sample space,
// correlated-equilibrium and environment-restricted Nash checks, and linear
// programs over the correlated-equilibrium polytope.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgames/linear_program.hpp"

namespace qgames {

enum class Player : int { kOne = 0, kTwo = 1 };

inline constexpr std::array<Player, 2> kPlayers{Player::kOne, Player::kTwo};

inline constexpr int index_of(Player p) { return static_cast<int>(p); }
inline constexpr Player other(Player p) { return p == Player::kOne ? Player::kTwo : Player::kOne; }
inline const char* to_string(Player p) { return p == Player::kOne ? "one" : "two"; }

struct PayoffPair {
  double one = 0.0;
  double two = 0.0;

  double of(Player p) const { return p == Player::kOne ? one : two; }
  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

/// Payoff table over S1 x S2, stored row-major (player one picks the row).
class BimatrixGame {
 public:
  BimatrixGame(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<PayoffPair> payoffs,
               std::array<std::string, 2> player_names = {"One", "Two"})
      : labels_{std::move(row_labels), std::move(col_labels)},
        payoffs_(std::move(payoffs)),
        players_(std::move(player_names)) {
    if (labels_[0].empty() || labels_[1].empty()) {
      throw std::invalid_argument("BimatrixGame: each player needs at least one strategy");
    }
    if (payoffs_.size() != labels_[0].size() * labels_[1].size()) {
      throw std::invalid_argument("BimatrixGame: payoff table has " + std::to_string(payoffs_.size()) +
                                  " cells, expected " +
                                  std::to_string(labels_[0].size() * labels_[1].size()));
    }
    for (const PayoffPair& p : payoffs_) {
      if (!std::isfinite(p.one) || !std::isfinite(p.two)) {
        throw std::invalid_argument("BimatrixGame: payoffs must be finite");
      }
    }
  }

  std::size_t rows() const { return labels_[0].size(); }
  std::size_t cols() const { return labels_[1].size(); }
  std::size_t num_strategies(Player p) const { return labels_[index_of(p)].size(); }
  const std::vector<std::string>& labels(Player p) const { return labels_[index_of(p)]; }
  const std::array<std::string, 2>& player_names() const { return players_; }
  const std::vector<PayoffPair>& payoffs() const { return payoffs_; }

  const PayoffPair& payoff(std::size_t row, std::size_t col) const { return payoffs_[row * cols() + col]; }

  /// Payoff to `p` when `own` is p's strategy and `opp` the opponent's.
  double payoff_to(Player p, std::size_t own, std::size_t opp) const {
    return p == Player::kOne ? payoff(own, opp).one : payoff(opp, own).two;
  }

  std::size_t strategy_index(Player p, std::string_view label) const {
    const auto& l = labels(p);
    const auto it = std::find(l.begin(), l.end(), label);
    if (it == l.end()) {
      throw std::invalid_argument("unknown strategy '" + std::string(label) + "' for player " +
                                  to_string(p));
    }
    return static_cast<std::size_t>(it - l.begin());
  }

 private:
  std::array<std::vector<std::string>, 2> labels_;
  std::vector<PayoffPair> payoffs_;
  std::array<std::string, 2> players_;
};

/// Probability distribution over S1 x S2, row-major.
class ProfileDistribution {
 public:
  ProfileDistribution(std::size_t rows, std::size_t cols, std::vector<double> probabilities,
                      double tolerance = 1e-12)
      : rows_(rows), cols_(cols), p_(std::move(probabilities)) {
    if (p_.size() != rows * cols) {
      throw std::invalid_argument("ProfileDistribution: expected " + std::to_string(rows * cols) +
                                  " probabilities, got " + std::to_string(p_.size()));
    }
    double sum = 0.0;
    for (double v : p_) {
      if (!(v >= 0.0)) throw std::invalid_argument("ProfileDistribution: negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tolerance) {
      throw std::invalid_argument("ProfileDistribution: probabilities sum to " + std::to_string(sum));
    }
  }

  static ProfileDistribution point_mass(std::size_t rows, std::size_t cols, std::size_t row,
                                        std::size_t col) {
    std::vector<double> p(rows * cols, 0.0);
    p.at(row * cols + col) = 1.0;
    return ProfileDistribution(rows, cols, std::move(p));
  }

  static ProfileDistribution uniform(std::size_t rows, std::size_t cols) {
    return ProfileDistribution(rows, cols, std::vector<double>(rows * cols, 1.0 / double(rows * cols)));
  }

  /// (1 - w) a + w b.
  static ProfileDistribution mix(const ProfileDistribution& a, const ProfileDistribution& b, double w) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("mix: shape mismatch");
    std::vector<double> p(a.p_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (1.0 - w) * a.p_[i] + w * b.p_[i];
    return ProfileDistribution(a.rows_, a.cols_, std::move(p));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t row, std::size_t col) const { return p_[row * cols_ + col]; }
  const std::vector<double>& probabilities() const { return p_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> p_;
};

/// Finitely many atoms with probabilities.
class FiniteSampleSpace {
 public:
  explicit FiniteSampleSpace(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) throw std::invalid_argument("FiniteSampleSpace: no atoms");
    double sum = 0.0;
    for (double v : p_) {
      if (!(v >= 0.0)) throw std::invalid_argument("FiniteSampleSpace: negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("FiniteSampleSpace: probabilities sum to " + std::to_string(sum));
    }
  }

  static FiniteSampleSpace uniform(std::size_t atoms) {
    return FiniteSampleSpace(std::vector<double>(atoms, 1.0 / double(atoms)));
  }

  std::size_t size() const { return p_.size(); }
  double probability(std::size_t atom) const { return p_[atom]; }
  const std::vector<double>& probabilities() const { return p_; }

 private:
  std::vector<double> p_;
};

/// Strategy-valued function on a sample space: atom -> strategy index in [0, arity).
class RandomVariable {
 public:
  RandomVariable(std::string name, std::vector<std::size_t> values, std::size_t arity)
      : name_(std::move(name)), values_(std::move(values)), arity_(arity) {
    for (std::size_t v : values_) {
      if (v >= arity_) {
        throw std::invalid_argument("RandomVariable '" + name_ + "': value " + std::to_string(v) +
                                    " outside strategy set of size " + std::to_string(arity_));
      }
    }
  }

  static RandomVariable constant(std::string name, std::size_t atoms, std::size_t value,
                                 std::size_t arity) {
    return RandomVariable(std::move(name), std::vector<std::size_t>(atoms, value), arity);
  }

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }
  std::size_t operator()(std::size_t atom) const { return values_[atom]; }
  const std::vector<std::size_t>& values() const { return values_; }

  /// Same function on the sample space (names are ignored).
  bool same_function(const RandomVariable& other) const {
    return arity_ == other.arity_ && values_ == other.values_;
  }

 private:
  std::string name_;
  std::vector<std::size_t> values_;
  std::size_t arity_;
};

/// A shared sample space plus, for each player, the random variables that
/// player may condition on.
class ClassicalEnvironment {
 public:
  ClassicalEnvironment(FiniteSampleSpace space, std::vector<RandomVariable> player_one,
                       std::vector<RandomVariable> player_two)
      : space_(std::move(space)), vars_{std::move(player_one), std::move(player_two)} {
    for (const auto& set : vars_) {
      for (const RandomVariable& v : set) {
        if (v.size() != space_.size()) {
          throw std::invalid_argument("ClassicalEnvironment: variable '" + v.name() +
                                      "' is not defined on the shared sample space");
        }
      }
    }
  }

  const FiniteSampleSpace& space() const { return space_; }
  const std::vector<RandomVariable>& variables(Player p) const { return vars_[index_of(p)]; }

  /// Adds the constant variables (pure strategies) that are not already present.
  ClassicalEnvironment with_pure_strategies(std::size_t arity_one, std::size_t arity_two) const {
    auto sets = vars_;
    const std::array<std::size_t, 2> arity{arity_one, arity_two};
    for (int i = 0; i < 2; ++i) {
      for (std::size_t s = 0; s < arity[i]; ++s) {
        RandomVariable c = RandomVariable::constant("pure:" + std::to_string(s), space_.size(), s, arity[i]);
        const bool present = std::any_of(sets[i].begin(), sets[i].end(),
                                         [&](const RandomVariable& v) { return v.same_function(c); });
        if (!present) sets[i].push_back(std::move(c));
      }
    }
    return ClassicalEnvironment(space_, std::move(sets[0]), std::move(sets[1]));
  }

 private:
  FiniteSampleSpace space_;
  std::array<std::vector<RandomVariable>, 2> vars_;
};

/// Pushforward of the sample-space measure under (x, y).
inline ProfileDistribution induced_distribution(const FiniteSampleSpace& space, const RandomVariable& x,
                                                const RandomVariable& y) {
  if (x.size() != space.size() || y.size() != space.size()) {
    throw std::invalid_argument("induced_distribution: variable not defined on the sample space");
  }
  std::vector<double> p(x.arity() * y.arity(), 0.0);
  for (std::size_t w = 0; w < space.size(); ++w) p[x(w) * y.arity() + y(w)] += space.probability(w);
  return ProfileDistribution(x.arity(), y.arity(), std::move(p));
}

inline PayoffPair expected_payoffs(const BimatrixGame& game, const ProfileDistribution& dist) {
  if (dist.rows() != game.rows() || dist.cols() != game.cols()) {
    throw std::invalid_argument("expected_payoffs: distribution shape does not match the game");
  }
  PayoffPair out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      const double w = dist.at(r, c);
      out.one += w * game.payoff(r, c).one;
      out.two += w * game.payoff(r, c).two;
    }
  }
  return out;
}

/// Two strategies of one player are equivalent when they give both players the
/// same payoffs against every opponent strategy.
inline bool strategies_equivalent(const BimatrixGame& game, Player player, std::size_t s, std::size_t t,
                                  double tol = 1e-12) {
  const std::size_t n = game.num_strategies(player);
  if (s >= n || t >= n) throw std::out_of_range("strategies_equivalent: strategy index out of range");
  for (std::size_t u = 0; u < game.num_strategies(other(player)); ++u) {
    const PayoffPair& a = player == Player::kOne ? game.payoff(s, u) : game.payoff(u, s);
    const PayoffPair& b = player == Player::kOne ? game.payoff(t, u) : game.payoff(u, t);
    if (std::abs(a.one - b.one) > tol || std::abs(a.two - b.two) > tol) return false;
  }
  return true;
}

/// Largest gain any player obtains by disobeying a recommendation, summed over
/// the cells where that recommendation is made (the unconditional form of the
/// obedience inequalities).
inline double max_obedience_violation(const BimatrixGame& game, const ProfileDistribution& dist) {
  if (dist.rows() != game.rows() || dist.cols() != game.cols()) {
    throw std::invalid_argument("correlated equilibrium check: distribution shape does not match the game");
  }
  double worst = 0.0;
  for (Player p : kPlayers) {
    const std::size_t n = game.num_strategies(p);
    const std::size_t m = game.num_strategies(other(p));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t alt = 0; alt < n; ++alt) {
        if (alt == s) continue;
        double gain = 0.0;
        for (std::size_t u = 0; u < m; ++u) {
          const double w = p == Player::kOne ? dist.at(s, u) : dist.at(u, s);
          gain += w * (game.payoff_to(p, alt, u) - game.payoff_to(p, s, u));
        }
        worst = std::max(worst, gain);
      }
    }
  }
  return worst;
}

/// Aumann's obedience inequalities, ties counted as equilibrium.
inline bool is_correlated_equilibrium(const BimatrixGame& game, const ProfileDistribution& dist,
                                      double slack = 1e-10) {
  return max_obedience_violation(game, dist) <= slack;
}

namespace detail {

inline std::size_t find_variable(const ClassicalEnvironment& env, Player p, const RandomVariable& v) {
  const auto& set = env.variables(p);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i].same_function(v)) return i;
  }
  throw std::invalid_argument("random variable '" + v.name() + "' is not in player " + to_string(p) +
                              "'s environment");
}

}  // namespace detail

/// Nash check in G(E): strategy sets are the environment's variable sets.
inline bool is_nash_in_environment(const BimatrixGame& game, const ClassicalEnvironment& env,
                                   const RandomVariable& x, const RandomVariable& y, double tol = 1e-10) {
  detail::find_variable(env, Player::kOne, x);
  detail::find_variable(env, Player::kTwo, y);
  const FiniteSampleSpace& space = env.space();
  const PayoffPair current = expected_payoffs(game, induced_distribution(space, x, y));
  for (const RandomVariable& alt : env.variables(Player::kOne)) {
    if (expected_payoffs(game, induced_distribution(space, alt, y)).one > current.one + tol) return false;
  }
  for (const RandomVariable& alt : env.variables(Player::kTwo)) {
    if (expected_payoffs(game, induced_distribution(space, x, alt)).two > current.two + tol) return false;
  }
  return true;
}

/// Pure-strategy Nash equilibria, as (row, col) pairs in row-major order.
inline std::vector<std::pair<std::size_t, std::size_t>> pure_nash_equilibria(const BimatrixGame& game,
                                                                             double tol = 1e-12) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      bool stable = true;
      for (std::size_t r2 = 0; r2 < game.rows() && stable; ++r2) {
        stable = game.payoff(r2, c).one <= game.payoff(r, c).one + tol;
      }
      for (std::size_t c2 = 0; c2 < game.cols() && stable; ++c2) {
        stable = game.payoff(r, c2).two <= game.payoff(r, c).two + tol;
      }
      if (stable) out.emplace_back(r, c);
    }
  }
  return out;
}

enum class Arithmetic { kExact, kFloating };

struct CeOptimum {
  double value = 0.0;
  /// Populated when solved exactly.
  Rational exact_value;
  ProfileDistribution distribution;
};

namespace detail {

template <class Scalar>
LpResult<Scalar> solve_ce_program(const BimatrixGame& game, const std::vector<double>& objective,
                                  Scalar (*convert)(double)) {
  const std::size_t rows = game.rows();
  const std::size_t cols = game.cols();
  const std::size_t n = rows * cols;
  LinearProgram<Scalar> lp(n);
  std::vector<Scalar> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = convert(objective[i]);
  lp.set_objective(std::move(c));

  using Rel = typename LinearProgram<Scalar>::Relation;
  lp.add_constraint(std::vector<Scalar>(n, Scalar(1)), Rel::kEqual, Scalar(1));
  for (std::size_t s = 0; s < rows; ++s) {
    for (std::size_t alt = 0; alt < rows; ++alt) {
      if (alt == s) continue;
      std::vector<Scalar> a(n, Scalar(0));
      for (std::size_t u = 0; u < cols; ++u) {
        a[s * cols + u] = convert(game.payoff(alt, u).one) - convert(game.payoff(s, u).one);
      }
      lp.add_constraint(std::move(a), Rel::kLessEqual, Scalar(0));
    }
  }
  for (std::size_t s = 0; s < cols; ++s) {
    for (std::size_t alt = 0; alt < cols; ++alt) {
      if (alt == s) continue;
      std::vector<Scalar> a(n, Scalar(0));
      for (std::size_t u = 0; u < rows; ++u) {
        a[u * cols + s] = convert(game.payoff(u, alt).two) - convert(game.payoff(u, s).two);
      }
      lp.add_constraint(std::move(a), Rel::kLessEqual, Scalar(0));
    }
  }
  return lp.maximize(Scalar(0));
}

inline double identity_double(double v) { return v; }

}  // namespace detail

/// Maximizes sum(objective[cell] * mu[cell]) over the correlated equilibria of
/// `game`. With Arithmetic::kExact the payoffs are converted to exact
/// rationals (every double is one) and the program is solved without rounding.
inline CeOptimum ce_polytope_optimize(const BimatrixGame& game, const std::vector<double>& objective,
                                      Arithmetic arithmetic = Arithmetic::kExact) {
  const std::size_t n = game.rows() * game.cols();
  if (objective.size() != n) throw std::invalid_argument("ce_polytope_optimize: objective size mismatch");
  if (arithmetic == Arithmetic::kExact) {
    const auto result = detail::solve_ce_program<Rational>(game, objective, &to_rational);
    if (result.status != LpStatus::kOptimal) {
      throw std::runtime_error(std::string("ce_polytope_optimize: solver returned ") +
                               to_string(result.status));
    }
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = to_double(result.solution[i]);
    return {to_double(result.value), result.value, ProfileDistribution(game.rows(), game.cols(), std::move(p), 1e-9)};
  }
  const auto result = detail::solve_ce_program<double>(game, objective, &detail::identity_double);
  if (result.status != LpStatus::kOptimal) {
    throw std::runtime_error(std::string("ce_polytope_optimize: solver returned ") + to_string(result.status));
  }
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = std::max(0.0, result.solution[i]);
  double sum = 0.0;
  for (double v : p) sum += v;
  for (double& v : p) v /= sum;
  return {result.value, to_rational(result.value), ProfileDistribution(game.rows(), game.cols(), std::move(p), 1e-9)};
}

/// Objective weights for the sum of both players' payoffs.
inline std::vector<double> total_payoff_objective(const BimatrixGame& game) {
  std::vector<double> w;
  w.reserve(game.payoffs().size());
  for (const PayoffPair& p : game.payoffs()) w.push_back(p.one + p.two);
  return w;
}

inline std::vector<double> player_payoff_objective(const BimatrixGame& game, Player player) {
  std::vector<double> w;
  w.reserve(game.payoffs().size());
  for (const PayoffPair& p : game.payoffs()) w.push_back(p.of(player));
  return w;
}

/// True iff the point mass on (row, col) is the only correlated equilibrium:
/// the least mass any correlated equilibrium puts on that cell is exactly one.
inline bool ce_is_unique_point_mass(const BimatrixGame& game, std::size_t row, std::size_t col) {
  std::vector<double> w(game.rows() * game.cols(), 0.0);
  w.at(row * game.cols() + col) = -1.0;
  return ce_polytope_optimize(game, w, Arithmetic::kExact).exact_value == Rational(-1);
}

/// Whether `target` is a convex combination of `points` (phase-one residual at
/// most `slack`).
inline bool in_convex_hull(std::span<const PayoffPair> points, const PayoffPair& target, double slack = 1e-9) {
  if (points.empty()) return false;
  LinearProgram<double> lp(points.size());
  using Rel = LinearProgram<double>::Relation;
  std::vector<double> ones(points.size(), 1.0), first, second;
  for (const PayoffPair& p : points) {
    first.push_back(p.one);
    second.push_back(p.two);
  }
  lp.add_constraint(std::move(ones), Rel::kEqual, 1.0);
  lp.add_constraint(std::move(first), Rel::kEqual, target.one);
  lp.add_constraint(std::move(second), Rel::kEqual, target.two);
  return lp.maximize(slack).status == LpStatus::kOptimal;
}

}  // namespace qgames
