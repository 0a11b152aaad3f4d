#pragma once

// Games of private information: the contingent-strategy game G#, quantum
// behavioral payoffs, the balanced eight-constant payoff structure, the
// classical Kuhn isomorphism between G#(E) and G(E)#, and stochastic
// extensions.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgames/classical_games.hpp"
#include "qgames/linear_program.hpp"
#include "qgames/quantum_core.hpp"

namespace qgames {

/// Signal sets A1, A2, a prior on A1 x A2, and a payoff table per signal pair.
class PrivateInfoGame {
 public:
  /// `prior` is row-major over A1 x A2; `stage_games` is row-major over the
  /// same signal pairs and every stage game shares the strategy labels.
  PrivateInfoGame(std::vector<std::string> signals_one, std::vector<std::string> signals_two,
                  std::vector<double> prior, std::vector<BimatrixGame> stage_games)
      : signals_{std::move(signals_one), std::move(signals_two)},
        prior_(std::move(prior)),
        stages_(std::move(stage_games)) {
    const std::size_t pairs = signals_[0].size() * signals_[1].size();
    if (pairs == 0) throw std::invalid_argument("PrivateInfoGame: empty signal set");
    if (prior_.size() != pairs) {
      throw std::invalid_argument("PrivateInfoGame: signal prior has " + std::to_string(prior_.size()) +
                                  " entries, expected " + std::to_string(pairs));
    }
    if (stages_.size() != pairs) {
      throw std::invalid_argument("PrivateInfoGame: expected one payoff table per signal pair");
    }
    double sum = 0.0;
    for (double v : prior_) {
      if (!(v >= 0.0)) throw std::invalid_argument("PrivateInfoGame: negative signal probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("PrivateInfoGame: signal prior sums to " + std::to_string(sum));
    }
    for (const BimatrixGame& g : stages_) {
      if (g.labels(Player::kOne) != stages_[0].labels(Player::kOne) ||
          g.labels(Player::kTwo) != stages_[0].labels(Player::kTwo)) {
        throw std::invalid_argument("PrivateInfoGame: stage games disagree on strategy labels");
      }
    }
  }

  std::size_t num_signals(Player p) const { return signals_[index_of(p)].size(); }
  std::size_t num_strategies(Player p) const { return stages_[0].num_strategies(p); }
  const std::vector<std::string>& signals(Player p) const { return signals_[index_of(p)]; }
  const std::vector<std::string>& strategies(Player p) const { return stages_[0].labels(p); }
  const std::array<std::string, 2>& player_names() const { return stages_[0].player_names(); }

  double prior(std::size_t a1, std::size_t a2) const { return prior_[a1 * signals_[1].size() + a2]; }
  const std::vector<double>& prior() const { return prior_; }

  /// Probability that player `p` receives signal `a`.
  double signal_marginal(Player p, std::size_t a) const {
    double m = 0.0;
    for (std::size_t b = 0; b < num_signals(other(p)); ++b) m += p == Player::kOne ? prior(a, b) : prior(b, a);
    return m;
  }

  const BimatrixGame& stage_game(std::size_t a1, std::size_t a2) const {
    return stages_[a1 * signals_[1].size() + a2];
  }
  const std::vector<BimatrixGame>& stage_games() const { return stages_; }

  const PayoffPair& payoff(std::size_t a1, std::size_t a2, std::size_t s1, std::size_t s2) const {
    return stage_game(a1, a2).payoff(s1, s2);
  }

  PrivateInfoGame with_prior(std::vector<double> prior) const {
    return PrivateInfoGame(signals_[0], signals_[1], std::move(prior), stages_);
  }

 private:
  std::array<std::vector<std::string>, 2> signals_;
  std::vector<double> prior_;
  std::vector<BimatrixGame> stages_;
};

/// The eight payoff pairs of a 2-signal, 2-strategy game whose CD, DC and DD
/// tables coincide:
///
///   both C:  (A,B) (C,D) / (E,F) (G,H)      any D:  (I,J) (K,L) / (M,N) (P,Q)
///
/// Cells are stored in the order HH, HT, TH, TT; the prior in the order CC, CD, DC, DD.
class PayoffStructure {
 public:
  PayoffStructure(std::array<PayoffPair, 4> both_c, std::array<PayoffPair, 4> any_d,
                  std::array<double, 4> prior = {0.25, 0.25, 0.25, 0.25})
      : both_c_(both_c), any_d_(any_d), prior_(prior) {
    for (const auto* table : {&both_c_, &any_d_}) {
      for (const PayoffPair& p : *table) {
        if (!std::isfinite(p.one) || !std::isfinite(p.two)) {
          throw std::invalid_argument("PayoffStructure: payoffs must be finite");
        }
      }
    }
    double sum = 0.0;
    for (double v : prior_) {
      if (!(v >= 0.0)) throw std::invalid_argument("PayoffStructure: negative signal probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("PayoffStructure: prior does not sum to 1");
  }

  const std::array<PayoffPair, 4>& both_c() const { return both_c_; }
  const std::array<PayoffPair, 4>& any_d() const { return any_d_; }
  const std::array<double, 4>& prior() const { return prior_; }

  /// Table for signal pair (a1, a2), signal 0 being C.
  const std::array<PayoffPair, 4>& table(std::size_t a1, std::size_t a2) const {
    return a1 == 0 && a2 == 0 ? both_c_ : any_d_;
  }

  PrivateInfoGame to_game(std::array<std::string, 2> signal_labels = {"C", "D"},
                          std::array<std::string, 2> strategy_labels = {"H", "T"},
                          std::array<std::string, 2> player_names = {"One", "Two"}) const {
    std::vector<BimatrixGame> stages;
    for (std::size_t a1 = 0; a1 < 2; ++a1) {
      for (std::size_t a2 = 0; a2 < 2; ++a2) {
        const auto& t = table(a1, a2);
        stages.emplace_back(std::vector<std::string>{strategy_labels[0], strategy_labels[1]},
                            std::vector<std::string>{strategy_labels[0], strategy_labels[1]},
                            std::vector<PayoffPair>(t.begin(), t.end()), player_names);
      }
    }
    const std::vector<std::string> signals{signal_labels[0], signal_labels[1]};
    return PrivateInfoGame(signals, signals, std::vector<double>(prior_.begin(), prior_.end()),
                           std::move(stages));
  }

  /// Recovers the structure from a 2x2x2x2 game whose three non-(0,0) tables coincide.
  static std::optional<PayoffStructure> from_game(const PrivateInfoGame& g) {
    for (Player p : kPlayers) {
      if (g.num_signals(p) != 2 || g.num_strategies(p) != 2) return std::nullopt;
    }
    auto cells = [&](std::size_t a1, std::size_t a2) {
      const auto& v = g.stage_game(a1, a2).payoffs();
      return std::array<PayoffPair, 4>{v[0], v[1], v[2], v[3]};
    };
    const auto d = cells(0, 1);
    if (cells(1, 0) != d || cells(1, 1) != d) return std::nullopt;
    return PayoffStructure(cells(0, 0), d, {g.prior(0, 0), g.prior(0, 1), g.prior(1, 0), g.prior(1, 1)});
  }

 private:
  std::array<PayoffPair, 4> both_c_;
  std::array<PayoffPair, 4> any_d_;
  std::array<double, 4> prior_;
};

/// A+G = B+H, C+E = D+F, I+P = J+Q, K+M = L+N. Sums are formed exactly and
/// compared within `tol`.
inline bool is_balanced(const PayoffStructure& ps, double tol = 1e-12) {
  auto holds = [tol](const std::array<PayoffPair, 4>& t) {
    const Rational diag = to_rational(t[0].one) + to_rational(t[3].one) - to_rational(t[0].two) -
                          to_rational(t[3].two);
    const Rational off = to_rational(t[1].one) + to_rational(t[2].one) - to_rational(t[1].two) -
                         to_rational(t[2].two);
    return std::abs(to_double(diag)) <= tol && std::abs(to_double(off)) <= tol;
  };
  return holds(ps.both_c()) && holds(ps.any_d());
}

/// A map from signal index to strategy index.
using ContingentStrategy = std::vector<std::size_t>;

/// All maps A -> S, in mixed-radix order with the first signal most significant.
inline std::vector<ContingentStrategy> enumerate_contingent_strategies(std::size_t num_signals,
                                                                       std::size_t num_strategies) {
  std::vector<ContingentStrategy> out;
  ContingentStrategy f(num_signals, 0);
  for (;;) {
    out.push_back(f);
    std::size_t i = num_signals;
    while (i > 0) {
      --i;
      if (++f[i] < num_strategies) break;
      f[i] = 0;
      if (i == 0) return out;
    }
    if (num_signals == 0) return out;
  }
}

inline std::string contingent_label(const ContingentStrategy& f, const std::vector<std::string>& signals,
                                    const std::vector<std::string>& strategies) {
  std::string s;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (a > 0) s += "|";
    s += signals[a] + ":" + strategies[f[a]];
  }
  return s;
}

/// G#: contingent strategies, payoffs averaged over the signal prior.
inline BimatrixGame associated_game(const PrivateInfoGame& g) {
  const auto f1 = enumerate_contingent_strategies(g.num_signals(Player::kOne), g.num_strategies(Player::kOne));
  const auto f2 = enumerate_contingent_strategies(g.num_signals(Player::kTwo), g.num_strategies(Player::kTwo));
  std::vector<std::string> rows, cols;
  for (const auto& f : f1) rows.push_back(contingent_label(f, g.signals(Player::kOne), g.strategies(Player::kOne)));
  for (const auto& f : f2) cols.push_back(contingent_label(f, g.signals(Player::kTwo), g.strategies(Player::kTwo)));
  std::vector<PayoffPair> payoffs;
  payoffs.reserve(f1.size() * f2.size());
  for (const auto& x : f1) {
    for (const auto& y : f2) {
      PayoffPair acc;
      for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = 0; b < y.size(); ++b) {
          const double w = g.prior(a, b);
          if (w == 0.0) continue;
          const PayoffPair& p = g.payoff(a, b, x[a], y[b]);
          acc.one += w * p.one;
          acc.two += w * p.two;
        }
      }
      payoffs.push_back(acc);
    }
  }
  return BimatrixGame(std::move(rows), std::move(cols), std::move(payoffs), g.player_names());
}

/// Per-signal moves of both players in G(xi)#.
struct BehavioralProfile {
  std::vector<PlayerMove> one;
  std::vector<PlayerMove> two;

  const std::vector<PlayerMove>& moves(Player p) const { return p == Player::kOne ? one : two; }
  std::vector<PlayerMove>& moves(Player p) { return p == Player::kOne ? one : two; }
};

namespace detail {

inline void require_binary(const PrivateInfoGame& g, const BehavioralProfile& profile) {
  for (Player p : kPlayers) {
    if (g.num_strategies(p) != 2) {
      throw std::invalid_argument("behavioral payoff: quantum moves need exactly two strategies per player");
    }
    if (profile.moves(p).size() != g.num_signals(p)) {
      throw std::invalid_argument("behavioral payoff: profile does not cover player " +
                                  std::string(to_string(p)) + "'s signals");
    }
  }
}

inline PayoffPair stage_expectation(const PrivateInfoGame& g, std::size_t a1, std::size_t a2,
                                    const JointOutcomeDistribution& mu) {
  PayoffPair out;
  for (Side s : kSides) {
    for (Side t : kSides) {
      const double w = mu.at(s, t);
      const PayoffPair& p = g.payoff(a1, a2, index_of(s), index_of(t));
      out.one += w * p.one;
      out.two += w * p.two;
    }
  }
  return out;
}

}  // namespace detail

/// Ex-ante payoffs of a behavioral profile in G(xi)#.
inline PayoffPair behavioral_payoff(const PrivateInfoGame& g, const TwoQubitState& xi,
                                    const BehavioralProfile& profile) {
  detail::require_binary(g, profile);
  PayoffPair out;
  for (std::size_t a = 0; a < g.num_signals(Player::kOne); ++a) {
    for (std::size_t b = 0; b < g.num_signals(Player::kTwo); ++b) {
      const double w = g.prior(a, b);
      if (w == 0.0) continue;
      const PayoffPair p =
          detail::stage_expectation(g, a, b, outcome_distribution(xi, profile.one[a], profile.two[b]));
      out.one += w * p.one;
      out.two += w * p.two;
    }
  }
  return out;
}

/// Expected payoff to `player` conditional on receiving `signal`, when that
/// player plays `move` at the signal and the opponent follows `profile`.
inline double conditional_payoff(const PrivateInfoGame& g, const TwoQubitState& xi,
                                 const BehavioralProfile& profile, Player player, std::size_t signal,
                                 const PlayerMove& move) {
  detail::require_binary(g, profile);
  const double marginal = g.signal_marginal(player, signal);
  if (marginal <= 0.0) throw std::invalid_argument("conditional_payoff: signal has probability zero");
  double total = 0.0;
  for (std::size_t b = 0; b < g.num_signals(other(player)); ++b) {
    const std::size_t a1 = player == Player::kOne ? signal : b;
    const std::size_t a2 = player == Player::kOne ? b : signal;
    const double w = g.prior(a1, a2);
    if (w == 0.0) continue;
    const JointOutcomeDistribution mu = player == Player::kOne
                                            ? outcome_distribution(xi, move, profile.two[b])
                                            : outcome_distribution(xi, profile.one[b], move);
    total += w * detail::stage_expectation(g, a1, a2, mu).of(player);
  }
  return total / marginal;
}

/// Pure behavioral profiles: every pair of contingent strategies, as moves.
inline std::vector<BehavioralProfile> pure_behavioral_profiles(const PrivateInfoGame& g) {
  std::vector<BehavioralProfile> out;
  for (const auto& x : enumerate_contingent_strategies(g.num_signals(Player::kOne), 2)) {
    for (const auto& y : enumerate_contingent_strategies(g.num_signals(Player::kTwo), 2)) {
      BehavioralProfile bp;
      for (std::size_t s : x) bp.one.emplace_back(kSides[s]);
      for (std::size_t s : y) bp.two.emplace_back(kSides[s]);
      out.push_back(std::move(bp));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kuhn isomorphism on a finite sample space.

/// Assignment of atoms to blocks.
struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t num_blocks = 0;
};

/// Coarsest partition on which every variable in `vars` is constant.
inline Partition partition_generated_by(std::span<const RandomVariable> vars, std::size_t atoms) {
  Partition part;
  part.block_of.assign(atoms, 0);
  std::vector<std::vector<std::size_t>> keys;
  for (std::size_t w = 0; w < atoms; ++w) {
    std::vector<std::size_t> key;
    for (const RandomVariable& v : vars) key.push_back(v(w));
    std::size_t k = 0;
    while (k < keys.size() && keys[k] != key) ++k;
    if (k == keys.size()) keys.push_back(std::move(key));
    part.block_of[w] = k;
  }
  part.num_blocks = keys.size();
  return part;
}

/// Both orders of "add contingent strategies" and "randomize over the
/// environment", with the bijection between their strategy sets.
struct KuhnConstruction {
  /// G#(E): a strategy is a map block -> contingent strategy.
  BimatrixGame contingent_then_randomized;
  /// G(E)#: a strategy is a map signal -> (block -> strategy).
  BimatrixGame randomized_then_contingent;
  /// phi[p][i] is the index in G(E)# of strategy i of G#(E).
  std::array<std::vector<std::size_t>, 2> phi;
  bool maps_are_inverse = false;
  bool payoffs_match = false;

  bool isomorphic() const { return maps_are_inverse && payoffs_match; }
};

namespace detail {

inline std::size_t encode(const std::vector<std::size_t>& digits, std::size_t radix) {
  std::size_t v = 0;
  for (std::size_t d : digits) v = v * radix + d;
  return v;
}

inline std::vector<std::size_t> decode(std::size_t v, std::size_t radix, std::size_t length) {
  std::vector<std::size_t> digits(length, 0);
  for (std::size_t i = length; i > 0; --i) {
    digits[i - 1] = v % radix;
    v /= radix;
  }
  return digits;
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// A strategy of G#(E) is f[block][signal]; of G(E)# is g[signal][block].
using Grid = std::vector<std::vector<std::size_t>>;

inline Grid transpose_grid(const Grid& f, std::size_t inner) {
  Grid g(inner, std::vector<std::size_t>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < inner; ++j) g[j][i] = f[i][j];
  }
  return g;
}

// f[block] is a contingent strategy encoded in base |S| over the signals.
inline Grid decode_mixed_first(std::size_t index, std::size_t blocks, std::size_t signals, std::size_t strategies) {
  const auto per_block = decode(index, ipow(strategies, signals), blocks);
  Grid f;
  for (std::size_t c : per_block) f.push_back(decode(c, strategies, signals));
  return f;
}

inline std::size_t encode_mixed_first(const Grid& f, std::size_t signals, std::size_t strategies) {
  std::vector<std::size_t> per_block;
  for (const auto& row : f) per_block.push_back(encode(row, strategies));
  return encode(per_block, ipow(strategies, signals));
}

inline Grid decode_behavioral_first(std::size_t index, std::size_t blocks, std::size_t signals,
                                    std::size_t strategies) {
  const auto per_signal = decode(index, ipow(strategies, blocks), signals);
  Grid g;
  for (std::size_t c : per_signal) g.push_back(decode(c, strategies, blocks));
  return g;
}

inline std::size_t encode_behavioral_first(const Grid& g, std::size_t blocks, std::size_t strategies) {
  std::vector<std::size_t> per_signal;
  for (const auto& row : g) per_signal.push_back(encode(row, strategies));
  return encode(per_signal, ipow(strategies, blocks));
}

}  // namespace detail

/// Builds G#(E) and G(E)# for a finite game and environment. Each player's
/// information is the partition generated by all of that player's variables.
inline KuhnConstruction kuhn_construction(const PrivateInfoGame& g, const ClassicalEnvironment& env,
                                          double tol = 1e-12) {
  using detail::Grid;
  const FiniteSampleSpace& space = env.space();
  const std::size_t atoms = space.size();
  std::array<Partition, 2> part;
  std::array<std::size_t, 2> nsig{}, nstr{}, count{};
  for (Player p : kPlayers) {
    const int i = index_of(p);
    part[i] = partition_generated_by(env.variables(p), atoms);
    nsig[i] = g.num_signals(p);
    nstr[i] = g.num_strategies(p);
    count[i] = detail::ipow(detail::ipow(nstr[i], nsig[i]), part[i].num_blocks);
  }

  // G#(E) payoffs via the associated game.
  const BimatrixGame sharp = associated_game(g);
  auto mixed_first_payoff = [&](const Grid& f1, const Grid& f2) {
    PayoffPair acc;
    for (std::size_t w = 0; w < atoms; ++w) {
      const double pw = space.probability(w);
      if (pw == 0.0) continue;
      const auto& c1 = f1[part[0].block_of[w]];
      const auto& c2 = f2[part[1].block_of[w]];
      const PayoffPair& p = sharp.payoff(detail::encode(c1, nstr[0]), detail::encode(c2, nstr[1]));
      acc.one += pw * p.one;
      acc.two += pw * p.two;
    }
    return acc;
  };
  // G(E)# payoffs via induced distributions signal pair by signal pair.
  auto behavioral_first_payoff = [&](const Grid& g1, const Grid& g2) {
    PayoffPair acc;
    for (std::size_t a = 0; a < nsig[0]; ++a) {
      for (std::size_t b = 0; b < nsig[1]; ++b) {
        const double nu = g.prior(a, b);
        if (nu == 0.0) continue;
        std::vector<std::size_t> xv(atoms), yv(atoms);
        for (std::size_t w = 0; w < atoms; ++w) {
          xv[w] = g1[a][part[0].block_of[w]];
          yv[w] = g2[b][part[1].block_of[w]];
        }
        const ProfileDistribution mu = induced_distribution(space, RandomVariable("x", std::move(xv), nstr[0]),
                                                            RandomVariable("y", std::move(yv), nstr[1]));
        const PayoffPair p = expected_payoffs(g.stage_game(a, b), mu);
        acc.one += nu * p.one;
        acc.two += nu * p.two;
      }
    }
    return acc;
  };

  std::array<std::vector<Grid>, 2> mixed_first, behavioral_first;
  KuhnConstruction out{BimatrixGame({"-"}, {"-"}, {PayoffPair{}}), BimatrixGame({"-"}, {"-"}, {PayoffPair{}}), {}, true, true};
  for (int i = 0; i < 2; ++i) {
    const std::size_t nb = part[i].num_blocks;
    for (std::size_t k = 0; k < count[i]; ++k) {
      mixed_first[i].push_back(detail::decode_mixed_first(k, nb, nsig[i], nstr[i]));
      behavioral_first[i].push_back(detail::decode_behavioral_first(k, nb, nsig[i], nstr[i]));
    }
    // Phi(f)(a)(w) = f(w)(a); Psi(g)(w)(a) = g(a)(w).
    std::vector<std::size_t> phi(count[i]), psi(count[i]);
    for (std::size_t k = 0; k < count[i]; ++k) {
      phi[k] = detail::encode_behavioral_first(detail::transpose_grid(mixed_first[i][k], nsig[i]), nb, nstr[i]);
      psi[k] = detail::encode_mixed_first(detail::transpose_grid(behavioral_first[i][k], nb), nsig[i], nstr[i]);
    }
    for (std::size_t k = 0; k < count[i]; ++k) {
      if (phi[k] >= count[i] || psi[k] >= count[i] || psi[phi[k]] != k || phi[psi[k]] != k) {
        out.maps_are_inverse = false;
      }
    }
    out.phi[i] = std::move(phi);
  }

  std::vector<PayoffPair> mf, bf;
  mf.reserve(count[0] * count[1]);
  bf.reserve(count[0] * count[1]);
  for (std::size_t r = 0; r < count[0]; ++r) {
    for (std::size_t c = 0; c < count[1]; ++c) {
      mf.push_back(mixed_first_payoff(mixed_first[0][r], mixed_first[1][c]));
      bf.push_back(behavioral_first_payoff(behavioral_first[0][r], behavioral_first[1][c]));
    }
  }
  for (std::size_t r = 0; r < count[0] && out.maps_are_inverse; ++r) {
    for (std::size_t c = 0; c < count[1]; ++c) {
      const PayoffPair& a = mf[r * count[1] + c];
      const PayoffPair& b = bf[out.phi[0][r] * count[1] + out.phi[1][c]];
      if (std::abs(a.one - b.one) > tol || std::abs(a.two - b.two) > tol) out.payoffs_match = false;
    }
  }
  if (!out.maps_are_inverse) out.payoffs_match = false;

  auto labels = [](std::size_t n, const char* prefix) {
    std::vector<std::string> l;
    for (std::size_t k = 0; k < n; ++k) l.push_back(prefix + std::to_string(k));
    return l;
  };
  out.contingent_then_randomized = BimatrixGame(labels(count[0], "f"), labels(count[1], "f"), std::move(mf), g.player_names());
  out.randomized_then_contingent = BimatrixGame(labels(count[0], "g"), labels(count[1], "g"), std::move(bf), g.player_names());
  return out;
}

/// True when G#(E) and G(E)# are isomorphic through the argument swap.
inline bool kuhn_check(const PrivateInfoGame& g, const ClassicalEnvironment& env) {
  return kuhn_construction(g, env).isomorphic();
}

// ---------------------------------------------------------------------------
// Stochastic extensions.

/// Index of the first candidate payoff pair outside the convex hull of the
/// base game's payoff pairs, if any.
inline std::optional<std::size_t> first_extension_violation(const BimatrixGame& base,
                                                            std::span<const PayoffPair> candidate,
                                                            double slack = 1e-9) {
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (!in_convex_hull(base.payoffs(), candidate[i], slack)) return i;
  }
  return std::nullopt;
}

/// Every candidate payoff pair is an expectation of the base game's payoff
/// pairs. For games with a continuum of profiles pass a finite sample of
/// payoff pairs; one point outside the hull refutes the extension property.
inline bool is_stochastic_extension(const BimatrixGame& base, std::span<const PayoffPair> candidate,
                                    double slack = 1e-9) {
  return !first_extension_violation(base, candidate, slack).has_value();
}

inline bool is_stochastic_extension(const BimatrixGame& base, const BimatrixGame& candidate,
                                    double slack = 1e-9) {
  return is_stochastic_extension(base, std::span<const PayoffPair>(candidate.payoffs()), slack);
}

/// Payoff pairs of G(xi)# at the given behavioral profiles.
inline std::vector<PayoffPair> behavioral_payoff_sample(const PrivateInfoGame& g, const TwoQubitState& xi,
                                                        std::span<const BehavioralProfile> profiles) {
  std::vector<PayoffPair> out;
  out.reserve(profiles.size());
  for (const BehavioralProfile& bp : profiles) out.push_back(behavioral_payoff(g, xi, bp));
  return out;
}

}  // namespace qgames
