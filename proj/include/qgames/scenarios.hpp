#pragma once

// Worked scenarios: the cats/dogs question game, airline pricing under
// uncertain demand, the anti-coordination game with correlated signals, and
// the CHSH disagreement chart.

#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgames/classical_games.hpp"
#include "qgames/equilibrium_search.hpp"
#include "qgames/linear_program.hpp"
#include "qgames/private_info.hpp"
#include "qgames/quantum_core.hpp"

namespace qgames {

/// A game of private information together with its eight-constant form.
struct Scenario {
  std::string name;
  PayoffStructure structure;
  PrivateInfoGame game;
  std::array<std::string, 2> signal_labels;
  std::array<std::string, 2> strategy_labels;
};

inline Scenario make_scenario(std::string name, PayoffStructure ps, std::array<std::string, 2> signals,
                              std::array<std::string, 2> strategies, std::array<std::string, 2> players) {
  PrivateInfoGame g = ps.to_game(signals, strategies, players);
  return Scenario{std::move(name), std::move(ps), std::move(g), std::move(signals), std::move(strategies)};
}

/// Win (1, 1) by agreeing, except when both are asked about cats, where
/// disagreeing wins. Questions are independent fair coin flips.
inline Scenario cats_dogs() {
  const PayoffPair win{1.0, 1.0}, lose{0.0, 0.0};
  PayoffStructure ps({lose, win, win, lose}, {win, lose, lose, win});
  return make_scenario("cats_dogs", std::move(ps), {"cat", "dog"}, {"YES", "NO"}, {"One", "Two"});
}

// ---------------------------------------------------------------------------
// Airline pricing.

/// Parses "12", "-3.25", "1e2" or "108/19" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() { return std::invalid_argument("not a number: '" + std::string(text) + "'"); };
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  boost::multiprecision::cpp_int digits = 0, scale = 1;
  bool any = false, point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      if (point) scale *= 10;
      any = true;
    } else if (ch == '.' && !point) {
      point = true;
    } else {
      break;
    }
  }
  if (!any) throw fail();
  Rational value(digits, scale);
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    const std::string exponent(text.substr(i + 1));
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(exponent, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != exponent.size() || std::abs(e) > 300) throw fail();
    Rational ten(10);
    for (int k = 0; k < std::abs(e); ++k) value = e > 0 ? Rational(value * ten) : Rational(value / ten);
  }
  return negative ? Rational(-value) : value;
}

/// 2x low-demand customers with reservation price L, 2y high-demand customers
/// with reservation price H when at least one firm's signal is P, fixed cost F.
struct AirlineParameters {
  Rational x{49};
  Rational y{19};
  Rational low_price{1};
  Rational high_price{Rational(108) / 19};
  Rational fixed_cost{48};

  Rational a() const { return x * low_price - fixed_cost; }
  Rational b() const { return 2 * x * low_price - fixed_cost; }
  Rational c() const { return (x + y) * low_price - fixed_cost; }
  Rational d() const { return y * high_price - fixed_cost; }

  /// Surplus of all high-demand customers when they pay L instead of H.
  Rational high_demand_surplus() const { return 2 * y * (high_price - low_price); }

  /// Comma-separated x,y,L,H,F; entries may be fractions such as 108/19.
  static AirlineParameters parse(std::string_view text) {
    std::vector<Rational> v;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto end = comma == std::string_view::npos ? text.size() : comma;
      v.push_back(parse_rational(text.substr(start, end - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (v.size() != 5) throw std::invalid_argument("airline parameters: expected x,y,L,H,F");
    return AirlineParameters{v[0], v[1], v[2], v[3], v[4]};
  }

  /// Throws naming the first violated condition.
  void validate() const {
    auto str = [](const Rational& r) {
      std::ostringstream os;
      os << to_double(r);
      return os.str();
    };
    const std::array<std::pair<const char*, const Rational*>, 5> named{
        {{"x", &x}, {"y", &y}, {"L", &low_price}, {"H", &high_price}, {"F", &fixed_cost}}};
    for (const auto& [name, value] : named) {
      if (*value <= 0) throw std::invalid_argument(std::string("airline parameters: ") + name + " must be positive");
    }
    if (!(y < x)) throw std::invalid_argument("airline parameters violate y < x");
    if (!(a() < c())) throw std::invalid_argument("airline parameters violate A < C (A = " + str(a()) + ", C = " + str(c()) + ")");
    if (!(c() < b())) throw std::invalid_argument("airline parameters violate C < B (C = " + str(c()) + ", B = " + str(b()) + ")");
    if (!(b() < d())) {
      throw std::invalid_argument("airline parameters violate B < D (B = " + str(b()) + ", D = " + str(d()) +
                                  "): L is a dominant strategy");
    }
  }
};

inline PayoffStructure airline_structure(const AirlineParameters& params) {
  params.validate();
  const double a = to_double(params.a()), b = to_double(params.b()), c = to_double(params.c()),
               d = to_double(params.d());
  // Strategy 0 is L, strategy 1 is H; signal 0 is N, signal 1 is P.
  return PayoffStructure({PayoffPair{a, a}, PayoffPair{b, 0.0}, PayoffPair{0.0, b}, PayoffPair{0.0, 0.0}},
                         {PayoffPair{c, c}, PayoffPair{b, 0.0}, PayoffPair{0.0, b}, PayoffPair{d, d}});
}

inline Scenario airline(const AirlineParameters& params = {}) {
  return make_scenario("airline", airline_structure(params), {"N", "P"}, {"L", "H"}, {"Firm One", "Firm Two"});
}

inline Scenario build_scenario(std::string_view name, const std::optional<AirlineParameters>& params = std::nullopt) {
  if (name == "cats_dogs" || name == "cats-dogs") {
    if (params) throw std::invalid_argument("cats_dogs takes no parameters");
    return cats_dogs();
  }
  if (name == "airline") return airline(params.value_or(AirlineParameters{}));
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

/// Conditional return of each pure strategy for `player` at `signal` against
/// an opponent's contingent strategy.
inline std::array<double, 2> signal_pure_returns(const PrivateInfoGame& g, Player player, std::size_t signal,
                                                 const ContingentStrategy& opponent) {
  std::array<double, 2> out{};
  const double marginal = g.signal_marginal(player, signal);
  for (std::size_t s = 0; s < 2; ++s) {
    double total = 0.0;
    for (std::size_t b = 0; b < g.num_signals(other(player)); ++b) {
      const std::size_t a1 = player == Player::kOne ? signal : b;
      const std::size_t a2 = player == Player::kOne ? b : signal;
      const PayoffPair& p = player == Player::kOne ? g.payoff(a1, a2, s, opponent[b]) : g.payoff(a1, a2, opponent[b], s);
      total += g.prior(a1, a2) * p.of(player);
    }
    out[s] = total / marginal;
  }
  return out;
}

struct ClassicalEquilibrium {
  ContingentStrategy one;
  ContingentStrategy two;
  std::string label_one;
  std::string label_two;
  /// Per-firm expected payoff.
  std::array<double, 2> value{};
  std::size_t pure_equilibria = 0;
  /// The equilibrium action is the strict best response at every signal.
  bool strict_best_response = false;
  /// The point mass on the equilibrium is the only correlated equilibrium of G#.
  bool unique_correlated = false;
};

/// Pure equilibria of G# for a two-signal structure; throws when the
/// equilibrium is not unique.
inline ClassicalEquilibrium airline_classical_equilibrium(const Scenario& sc) {
  const PrivateInfoGame& g = sc.game;
  const BimatrixGame sharp = associated_game(g);
  const auto eqs = pure_nash_equilibria(sharp);
  if (eqs.size() != 1) {
    std::string list;
    for (const auto& [r, c] : eqs) list += " (" + sharp.labels(Player::kOne)[r] + ", " + sharp.labels(Player::kTwo)[c] + ")";
    throw std::runtime_error("expected a unique pure equilibrium, found " + std::to_string(eqs.size()) + ":" + list);
  }
  const auto [r, c] = eqs.front();
  const auto strategies = enumerate_contingent_strategies(2, 2);
  ClassicalEquilibrium out;
  out.one = strategies[r];
  out.two = strategies[c];
  out.label_one = sharp.labels(Player::kOne)[r];
  out.label_two = sharp.labels(Player::kTwo)[c];
  out.value = {sharp.payoff(r, c).one, sharp.payoff(r, c).two};
  out.pure_equilibria = eqs.size();
  out.strict_best_response = true;
  for (Player p : kPlayers) {
    const ContingentStrategy& own = p == Player::kOne ? out.one : out.two;
    const ContingentStrategy& opp = p == Player::kOne ? out.two : out.one;
    for (std::size_t a = 0; a < 2; ++a) {
      const auto ret = signal_pure_returns(g, p, a, opp);
      if (!(ret[own[a]] > ret[1 - own[a]])) out.strict_best_response = false;
    }
  }
  out.unique_correlated = ce_is_unique_point_mass(sharp, r, c);
  return out;
}

/// Action pair per signal pair (CC, CD, DC, DD) chosen with both signals known.
using PooledPlan = std::array<std::pair<std::size_t, std::size_t>, 4>;

/// Plays (L, H) when both signals are N and (H, H) otherwise.
inline PooledPlan collusive_plan() { return {{{0, 1}, {1, 1}, {1, 1}, {1, 1}}}; }

/// A plan made with pooled signals is self-enforcing when each recommended
/// pair is a Nash equilibrium of its stage table.
inline bool is_pooled_plan_equilibrium(const PayoffStructure& ps, const PooledPlan& plan) {
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const auto& t = ps.table(a, b);
      const auto [s1, s2] = plan[2 * a + b];
      if (t[2 * (1 - s1) + s2].one > t[2 * s1 + s2].one) return false;
      if (t[2 * s1 + (1 - s2)].two > t[2 * s1 + s2].two) return false;
    }
  }
  return true;
}

enum class Regime { kClassical, kQuantum, kCollusion };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::kClassical: return "classical";
    case Regime::kQuantum: return "quantum";
    case Regime::kCollusion: return "collusion";
  }
  return "?";
}

struct WelfareReport {
  Regime regime = Regime::kClassical;
  double consumer_surplus = 0.0;
  double producer_surplus = 0.0;
  double total = 0.0;
};

/// Outcome distribution (cells LL, LH, HL, HH) for each signal pair NN, NP, PN, PP.
using PlayBySignals = std::array<std::array<double, 4>, 4>;

/// Producer surplus is the firms' combined expected profit. Consumers gain
/// only when high-demand customers exist (some signal is P) and at least one
/// firm prices low; the low-price firm's capacity covers all of them.
inline WelfareReport welfare_from_play(const AirlineParameters& params, Regime regime, const PlayBySignals& play) {
  const PayoffStructure ps = airline_structure(params);
  const double surplus = to_double(params.high_demand_surplus());
  WelfareReport w;
  w.regime = regime;
  for (std::size_t pair = 0; pair < 4; ++pair) {
    const double prior = ps.prior()[pair];
    const auto& t = ps.table(pair / 2, pair % 2);
    for (std::size_t cell = 0; cell < 4; ++cell) w.producer_surplus += prior * play[pair][cell] * (t[cell].one + t[cell].two);
    if (pair != 0) w.consumer_surplus += prior * (1.0 - play[pair][3]) * surplus;
  }
  w.total = w.consumer_surplus + w.producer_surplus;
  return w;
}

/// Welfare under the unique classical equilibrium, the rotation-family quantum
/// equilibrium (at `theta`, default the optimum), or collusion.
inline WelfareReport welfare_report(const AirlineParameters& params, Regime regime,
                                    std::optional<double> theta = std::nullopt) {
  const Scenario sc = airline(params);
  PlayBySignals play{};
  switch (regime) {
    case Regime::kClassical: {
      const ClassicalEquilibrium eq = airline_classical_equilibrium(sc);
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) play[2 * a + b][2 * eq.one[a] + eq.two[b]] = 1.0;
      }
      break;
    }
    case Regime::kQuantum: {
      const double th = theta ? *theta : optimize_theta(sc.structure).theta;
      const BehavioralProfile bp = ThetaProfile(th).to_behavioral();
      const TwoQubitState xi = TwoQubitState::maximally_entangled();
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) play[2 * a + b] = outcome_distribution(xi, bp.one[a], bp.two[b]).probabilities();
      }
      break;
    }
    case Regime::kCollusion: {
      const PooledPlan plan = collusive_plan();
      for (std::size_t pair = 0; pair < 4; ++pair) play[pair][2 * plan[pair].first + plan[pair].second] = 1.0;
      break;
    }
  }
  return welfare_from_play(params, regime, play);
}

// ---------------------------------------------------------------------------
// Anti-coordination game with correlated signals.

/// Payoffs (0,0) (2,1) / (1,2) (0,0) over strategies H, T; variables X and Y
/// for player one and W for player two on 24 equiprobable atoms, realizing
///   P(X = W = H) = P(X = W = T) = 1/8,  P(X != W, W = H) = P(X != W, W = T) = 3/8,
///   P(Y = W = H) = P(Y = W = T) = 1/12, P(Y != W, W = H) = P(Y != W, W = T) = 5/12.
struct AnticoordinationScenario {
  BimatrixGame game;
  FiniteSampleSpace space;
  RandomVariable x;
  RandomVariable y;
  RandomVariable w;
  ClassicalEnvironment environment;  // E({X, Y}, {W})
};

inline AnticoordinationScenario anticoordination_scenario() {
  BimatrixGame game({"H", "T"}, {"H", "T"},
                    {PayoffPair{0, 0}, PayoffPair{2, 1}, PayoffPair{1, 2}, PayoffPair{0, 0}});
  constexpr std::size_t kAtoms = 24;
  std::vector<std::size_t> w(kAtoms), x(kAtoms), y(kAtoms);
  for (std::size_t k = 0; k < kAtoms; ++k) {
    // Atoms 0..11 have W = H, atoms 12..23 have W = T.
    const bool w_heads = k < 12;
    const std::size_t j = k % 12;
    w[k] = w_heads ? 0 : 1;
    const std::size_t same = w[k], differ = 1 - w[k];
    x[k] = j < 3 ? same : differ;  // 3 of 12 agree: 1/8 overall
    y[k] = j < 2 ? same : differ;  // 2 of 12 agree: 1/12 overall
  }
  FiniteSampleSpace space = FiniteSampleSpace::uniform(kAtoms);
  RandomVariable X("X", x, 2), Y("Y", y, 2), W("W", w, 2);
  ClassicalEnvironment env(space, {X, Y}, {W});
  return {std::move(game), std::move(space), std::move(X), std::move(Y), std::move(W), std::move(env)};
}

// ---------------------------------------------------------------------------
// CHSH chart.

/// P(X != W) <= P(X != Y) + P(Y != Z) + P(Z != W) for classical binary variables.
inline bool chain_inequality_holds(double x_ne_y, double y_ne_z, double z_ne_w, double x_ne_w, double tol = 1e-12) {
  return x_ne_w <= x_ne_y + y_ne_z + z_ne_w + tol;
}

struct ChshChart {
  /// Outcome tables for coin angle pairs (C,C), (C,D), (D,C), (D,D) in HH+TT.
  std::array<JointOutcomeDistribution, 4> tables;
  double x_ne_y = 0.0;
  double y_ne_z = 0.0;
  double z_ne_w = 0.0;
  double x_ne_w = 0.0;
  bool chain_violated = false;
};

/// Coin one rotates by M(-pi/8) for C and M(pi/8) for D; coin two by M(pi/4)
/// for C and M(0) for D. X, Z are coin one at C, D; Y, W are coin two at D, C.
inline ChshChart chsh_chart() {
  using std::numbers::pi;
  const TwoQubitState xi = TwoQubitState::maximally_entangled();
  const std::array<SpecialUnitary, 2> one{rotation(-pi / 8), rotation(pi / 8)};
  const std::array<SpecialUnitary, 2> two{rotation(pi / 4), rotation(0.0)};
  auto table = [&](int a, int b) { return outcome_distribution(xi, one[a], two[b]); };
  ChshChart chart{{table(0, 0), table(0, 1), table(1, 0), table(1, 1)}};
  chart.x_ne_y = chart.tables[1].disagreement();
  chart.y_ne_z = chart.tables[3].disagreement();
  chart.z_ne_w = chart.tables[2].disagreement();
  chart.x_ne_w = chart.tables[0].disagreement();
  chart.chain_violated = !chain_inequality_holds(chart.x_ne_y, chart.y_ne_z, chart.z_ne_w, chart.x_ne_w);
  return chart;
}

}  // namespace qgames
