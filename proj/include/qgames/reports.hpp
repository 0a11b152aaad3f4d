#pragma once

// Report builders behind the qgames subcommands.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "qgames/classical_games.hpp"
#include "qgames/equilibrium_search.hpp"
#include "qgames/io.hpp"
#include "qgames/private_info.hpp"
#include "qgames/report.hpp"
#include "qgames/scenarios.hpp"

namespace qgames {

inline constexpr std::uint64_t kDefaultSeed = 20111201;

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> theta;
  std::optional<AirlineParameters> params;
};

inline std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Report chsh_report() {
  const ChshChart chart = chsh_chart();
  Report r{"chsh", {}, true};
  static const char* kPairs[] = {"C,C", "C,D", "D,C", "D,D"};
  for (int k = 0; k < 4; ++k) {
    const std::string section = std::string("table ") + kPairs[k];
    const auto& t = chart.tables[std::size_t(k)];
    for (Side a : kSides) {
      for (Side b : kSides) r.add(section, std::string(to_string(a)) + to_string(b), t.at(a, b));
    }
    r.add(section, "disagreement", t.disagreement());
  }
  r.add("chain", "P(X!=Y)", chart.x_ne_y);
  r.add("chain", "P(Y!=Z)", chart.y_ne_z);
  r.add("chain", "P(Z!=W)", chart.z_ne_w);
  r.add("chain", "P(X!=W)", chart.x_ne_w);
  r.add("chain", "bound", chart.x_ne_y + chart.y_ne_z + chart.z_ne_w);
  r.check("chain", "violated", chart.chain_violated);
  return r;
}

inline void add_quantum_section(Report& r, const Scenario& sc, const RunOptions& opts) {
  const ThetaOptimum opt = optimize_theta(sc.structure);
  const double theta = opts.theta.value_or(opt.theta);
  VerifyOptions vo;
  vo.seed = opts.seed;
  vo.signal_labels = sc.signal_labels;
  vo.strategy_labels = sc.strategy_labels;
  const EquilibriumReport rep = verify_equilibrium(sc.structure, ThetaProfile(theta), vo);
  r.add("quantum", "theta_star", opt.theta);
  if (opts.theta) r.add("quantum", "theta", theta);
  r.add("quantum", "value", rep.value[0]);
  r.add("quantum", "value_two", rep.value[1]);
  r.check("quantum", "verdict", rep.verdict);
}

inline Report cats_dogs_report(const RunOptions& opts = {}) {
  const Scenario sc = cats_dogs();
  const BimatrixGame sharp = associated_game(sc.game);
  Report r{"cats-dogs", {}, true};
  double ceiling = -INFINITY;
  std::string argmax;
  for (std::size_t i = 0; i < sharp.rows(); ++i) {
    for (std::size_t j = 0; j < sharp.cols(); ++j) {
      if (sharp.payoff(i, j).one > ceiling) {
        ceiling = sharp.payoff(i, j).one;
        argmax = sharp.labels(Player::kOne)[i] + " / " + sharp.labels(Player::kTwo)[j];
      }
    }
  }
  r.add("classical", "profiles", double(sharp.rows() * sharp.cols()));
  r.add("classical", "ceiling", ceiling);
  r.add("classical", "first_maximizer", argmax);
  add_quantum_section(r, sc, opts);
  return r;
}

enum class AirlineSection { kAll, kClassical, kQuantum, kClaims, kWelfare, kCe };

inline AirlineSection parse_airline_section(std::string_view s) {
  if (s == "all") return AirlineSection::kAll;
  if (s == "classical") return AirlineSection::kClassical;
  if (s == "quantum") return AirlineSection::kQuantum;
  if (s == "claims") return AirlineSection::kClaims;
  if (s == "welfare") return AirlineSection::kWelfare;
  if (s == "ce") return AirlineSection::kCe;
  throw std::invalid_argument("unknown report '" + std::string(s) +
                              "' (expected all, classical, quantum, claims, welfare or ce)");
}

inline Report airline_report(AirlineSection which = AirlineSection::kAll, const RunOptions& opts = {}) {
  const AirlineParameters params = opts.params.value_or(AirlineParameters{});
  const Scenario sc = airline(params);
  const bool all = which == AirlineSection::kAll;
  Report r{"airline", {}, true};
  r.add("parameters", "x", rational_text(params.x));
  r.add("parameters", "y", rational_text(params.y));
  r.add("parameters", "L", rational_text(params.low_price));
  r.add("parameters", "H", rational_text(params.high_price));
  r.add("parameters", "F", rational_text(params.fixed_cost));
  r.add("parameters", "A", to_double(params.a()));
  r.add("parameters", "B", to_double(params.b()));
  r.add("parameters", "C", to_double(params.c()));
  r.add("parameters", "D", to_double(params.d()));

  if (all || which == AirlineSection::kClassical) {
    const ClassicalEquilibrium eq = airline_classical_equilibrium(sc);
    r.add("classical", "equilibrium", eq.label_one + " / " + eq.label_two);
    r.add("classical", "value", eq.value[0]);
    r.add("classical", "value_two", eq.value[1]);
    r.add("classical", "strict_best_response", eq.strict_best_response);
    r.add("classical", "unique_correlated_equilibrium", eq.unique_correlated);
  }
  if (all || which == AirlineSection::kQuantum) add_quantum_section(r, sc, opts);
  if (all || which == AirlineSection::kClaims) {
    const double theta = opts.theta.value_or(optimize_theta(sc.structure).theta);
    VerifyOptions vo;
    vo.seed = opts.seed;
    vo.signal_labels = sc.signal_labels;
    vo.strategy_labels = sc.strategy_labels;
    const EquilibriumReport rep = verify_equilibrium(sc.structure, ThetaProfile(theta), vo);
    for (const DeviationRow& d : rep.deviations) {
      const std::string section = std::string("claims ") + to_string(d.player) + " " + d.signal_label;
      r.add(section, "pure_" + d.pure_labels[0], d.pure[0]);
      r.add(section, "pure_" + d.pure_labels[1], d.pure[1]);
      r.add(section, "quantum", d.equilibrium);
      r.add(section, "best_unitary_deviation", d.best_unitary);
    }
    r.check("claims", "deviation_proof", rep.verdict);
  }
  if (all || which == AirlineSection::kWelfare) {
    for (Regime regime : {Regime::kClassical, Regime::kQuantum, Regime::kCollusion}) {
      const WelfareReport w = welfare_report(params, regime, regime == Regime::kQuantum ? opts.theta : std::nullopt);
      const std::string section = std::string("welfare ") + to_string(regime);
      r.add(section, "consumer_surplus", w.consumer_surplus);
      r.add(section, "producer_surplus", w.producer_surplus);
      r.add(section, "total", w.total);
    }
    r.add("welfare collusion", "self_enforcing", is_pooled_plan_equilibrium(sc.structure, collusive_plan()));
  }
  if (all || which == AirlineSection::kCe) {
    const BimatrixGame sharp = associated_game(sc.game);
    const CeOptimum ce = ce_polytope_optimize(sharp, total_payoff_objective(sharp));
    const ClassicalEquilibrium eq = airline_classical_equilibrium(sc);
    const std::size_t r0 = sharp.strategy_index(Player::kOne, eq.label_one);
    const std::size_t c0 = sharp.strategy_index(Player::kTwo, eq.label_two);
    r.add("ce", "max_total_payoff", ce.value);
    r.add("ce", "max_total_payoff_exact", rational_text(ce.exact_value));
    r.check("ce", "equilibrium_point_mass_feasible",
            is_correlated_equilibrium(sharp, ProfileDistribution::point_mass(sharp.rows(), sharp.cols(), r0, c0)));
  }
  return r;
}

namespace detail {

inline void add_game_queries(Report& r, const BimatrixGame& game, const std::vector<NamedDistribution>& dists) {
  const auto eqs = pure_nash_equilibria(game);
  r.add("game", "rows", double(game.rows()));
  r.add("game", "cols", double(game.cols()));
  r.add("nash", "pure_equilibria", double(eqs.size()));
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    const auto [i, j] = eqs[k];
    r.add("nash", "equilibrium " + std::to_string(k + 1),
          game.labels(Player::kOne)[i] + " / " + game.labels(Player::kTwo)[j]);
  }
  // Exact arithmetic is cheap up to a few hundred cells.
  const Arithmetic arithmetic = game.rows() * game.cols() <= 256 ? Arithmetic::kExact : Arithmetic::kFloating;
  const CeOptimum total = ce_polytope_optimize(game, total_payoff_objective(game), arithmetic);
  r.add("correlated", "max_total_payoff", total.value);
  for (Player p : kPlayers) {
    const CeOptimum best = ce_polytope_optimize(game, player_payoff_objective(game, p), arithmetic);
    r.add("correlated", std::string("max_payoff_") + to_string(p), best.value);
  }
  for (const NamedDistribution& d : dists) {
    const std::string section = "distribution " + d.name;
    const bool ce = is_correlated_equilibrium(game, d.distribution);
    const PayoffPair pay = expected_payoffs(game, d.distribution);
    r.add(section, "payoff_one", pay.one);
    r.add(section, "payoff_two", pay.two);
    r.add(section, "max_obedience_violation", max_obedience_violation(game, d.distribution));
    r.add(section, "correlated_equilibrium", ce);
    if (d.expect != DistributionExpectation::kNone) {
      r.check(section, "as_expected", ce == (d.expect == DistributionExpectation::kCorrelatedEquilibrium));
    }
  }
}

}  // namespace detail

inline Report check_game_report(const LoadedGame& loaded, const RunOptions& opts = {}) {
  Report r{"check-game", {}, true};
  if (const GameFile* f = std::get_if<GameFile>(&loaded)) {
    r.add("game", "kind", std::string("bimatrix"));
    detail::add_game_queries(r, f->game, f->distributions);
    return r;
  }
  const PrivateInfoFile& f = std::get<PrivateInfoFile>(loaded);
  r.add("game", "kind", std::string("private information"));
  const BimatrixGame sharp = associated_game(f.game);
  detail::add_game_queries(r, sharp, f.distributions);
  if (const auto ps = PayoffStructure::from_game(f.game); ps && is_balanced(*ps)) {
    const ThetaOptimum opt = optimize_theta(*ps);
    VerifyOptions vo;
    vo.seed = opts.seed;
    vo.signal_labels = {f.game.signals(Player::kOne)[0], f.game.signals(Player::kOne)[1]};
    vo.strategy_labels = {f.game.strategies(Player::kOne)[0], f.game.strategies(Player::kOne)[1]};
    const double theta = opts.theta.value_or(opt.theta);
    const EquilibriumReport rep = verify_equilibrium(*ps, ThetaProfile(theta), vo);
    r.add("quantum", "theta_star", opt.theta);
    if (opts.theta) r.add("quantum", "theta", theta);
    r.add("quantum", "value", rep.value[0]);
    r.add("quantum", "equilibrium", rep.verdict);
  } else {
    r.add("quantum", "balanced", false);
  }
  return r;
}

}  // namespace qgames
