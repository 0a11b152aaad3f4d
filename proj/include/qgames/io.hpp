#pragma once

// JSON game files.
//
// Bimatrix game:
//   {
//     "players":    ["One", "Two"],                  (optional)
//     "strategies": [["H", "T"], ["H", "T"]],
//     "payoffs":    [[0, 0], [2, 1], [1, 2], [0, 0]],  row-major over S1 x S2
//     "distributions": [                               (optional)
//       {"name": "mixed", "probabilities": [0, 0.5, 0.5, 0],
//        "expect": "correlated_equilibrium" | "not_correlated_equilibrium"}
//     ]
//   }
//
// Game of private information: the same, plus
//     "signals":      [["C", "D"], ["C", "D"]],
//     "signal_prior": [0.25, 0.25, 0.25, 0.25],       row-major over A1 x A2 (optional, default uniform)
// and "payoffs" becomes an object keyed "<signal one>,<signal two>" whose
// values are row-major payoff arrays as above.
//
// Syntax errors report line and column; structural errors name the field path.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgames/classical_games.hpp"
#include "qgames/private_info.hpp"

namespace qgames {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::optional<std::size_t> line, std::optional<std::size_t> column,
             std::string field, const std::string& message)
      : std::runtime_error(format(source, line, column, field, message)),
        source_(std::move(source)),
        line_(line),
        column_(column),
        field_(std::move(field)) {}

  const std::string& source() const { return source_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(const std::string& source, std::optional<std::size_t> line,
                            std::optional<std::size_t> column, const std::string& field, const std::string& message) {
    std::string out = source;
    if (line) out += ":" + std::to_string(*line) + (column ? ":" + std::to_string(*column) : "");
    if (!field.empty()) out += ": field '" + field + "'";
    return out + ": " + message;
  }

  std::string source_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
  std::string field_;
};

enum class DistributionExpectation { kNone, kCorrelatedEquilibrium, kNotCorrelatedEquilibrium };

struct NamedDistribution {
  std::string name;
  ProfileDistribution distribution;
  DistributionExpectation expect = DistributionExpectation::kNone;
};

struct GameFile {
  BimatrixGame game;
  std::vector<NamedDistribution> distributions;
};

struct PrivateInfoFile {
  PrivateInfoGame game;
  std::vector<NamedDistribution> distributions;  // over the associated game's profiles
};

using LoadedGame = std::variant<GameFile, PrivateInfoFile>;

namespace detail {

using Json = nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ParseError(source_, std::nullopt, std::nullopt, field, message);
  }

  const Json& member(const Json& obj, const std::string& path, const char* name) const {
    if (!obj.is_object()) fail(path, "expected an object");
    const auto it = obj.find(name);
    if (it == obj.end()) fail(join(path, name), "missing required field");
    return *it;
  }

  std::vector<std::string> labels(const Json& j, const std::string& path) const {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) fail(index(path, i), "expected a string");
      out.push_back(j[i].get<std::string>());
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        if (out[i] == out[k]) fail(index(path, i), "duplicate label '" + out[i] + "'");
      }
    }
    return out;
  }

  std::array<std::vector<std::string>, 2> label_pair(const Json& j, const std::string& path) const {
    if (!j.is_array() || j.size() != 2) fail(path, "expected two label arrays, one per player");
    return {labels(j[0], index(path, 0)), labels(j[1], index(path, 1))};
  }

  std::array<std::string, 2> players(const Json& root) const {
    const auto it = root.find("players");
    if (it == root.end()) return {"One", "Two"};
    const auto names = labels(*it, "players");
    if (names.size() != 2) fail("players", "expected exactly two player names");
    return {names[0], names[1]};
  }

  double number(const Json& j, const std::string& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "expected a finite number");
    return v;
  }

  std::vector<double> numbers(const Json& j, const std::string& path, std::size_t expected) const {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    if (j.size() != expected) {
      fail(path, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], index(path, i)));
    return out;
  }

  std::vector<PayoffPair> payoffs(const Json& j, const std::string& path, std::size_t cells) const {
    if (!j.is_array()) fail(path, "expected a row-major array of payoff pairs");
    if (j.size() != cells) {
      fail(path, "expected " + std::to_string(cells) + " payoff pairs, found " + std::to_string(j.size()));
    }
    std::vector<PayoffPair> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = index(path, i);
      if (!j[i].is_array() || j[i].size() != 2) fail(p, "expected a pair [payoff to one, payoff to two]");
      out.push_back({number(j[i][0], index(p, 0)), number(j[i][1], index(p, 1))});
    }
    return out;
  }

  std::vector<NamedDistribution> distributions(const Json& root, std::size_t rows, std::size_t cols) const {
    std::vector<NamedDistribution> out;
    const auto it = root.find("distributions");
    if (it == root.end()) return out;
    if (!it->is_array()) fail("distributions", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = index("distributions", i);
      const Json& d = (*it)[i];
      const Json& name = member(d, p, "name");
      if (!name.is_string()) fail(join(p, "name"), "expected a string");
      const std::string probs_path = join(p, "probabilities");
      std::vector<double> probs = numbers(member(d, p, "probabilities"), probs_path, rows * cols);
      DistributionExpectation expect = DistributionExpectation::kNone;
      if (const auto e = d.find("expect"); e != d.end()) {
        const std::string s = e->is_string() ? e->get<std::string>() : "";
        if (s == "correlated_equilibrium") {
          expect = DistributionExpectation::kCorrelatedEquilibrium;
        } else if (s == "not_correlated_equilibrium") {
          expect = DistributionExpectation::kNotCorrelatedEquilibrium;
        } else {
          fail(join(p, "expect"), "expected \"correlated_equilibrium\" or \"not_correlated_equilibrium\"");
        }
      }
      try {
        out.push_back({name.get<std::string>(), ProfileDistribution(rows, cols, std::move(probs), 1e-9), expect});
      } catch (const std::invalid_argument& e) {
        fail(probs_path, e.what());
      }
    }
    return out;
  }

  static std::string join(const std::string& path, const std::string& name) {
    return path.empty() ? name : path + "." + name;
  }
  static std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

 private:
  std::string source_;
};

inline Json parse_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(source, line, column, "", message);
  }
}

inline GameFile read_bimatrix(const Json& root, const Reader& r) {
  const auto strategies = r.label_pair(r.member(root, "", "strategies"), "strategies");
  const std::size_t rows = strategies[0].size(), cols = strategies[1].size();
  auto payoffs = r.payoffs(r.member(root, "", "payoffs"), "payoffs", rows * cols);
  BimatrixGame game(strategies[0], strategies[1], std::move(payoffs), r.players(root));
  return {std::move(game), r.distributions(root, rows, cols)};
}

inline PrivateInfoFile read_private_info(const Json& root, const Reader& r) {
  const auto strategies = r.label_pair(r.member(root, "", "strategies"), "strategies");
  const auto signals = r.label_pair(r.member(root, "", "signals"), "signals");
  const auto names = r.players(root);
  const std::size_t pairs = signals[0].size() * signals[1].size();
  std::vector<double> prior(pairs, 1.0 / double(pairs));
  if (const auto it = root.find("signal_prior"); it != root.end()) prior = r.numbers(*it, "signal_prior", pairs);

  const Json& payoffs = r.member(root, "", "payoffs");
  if (!payoffs.is_object()) r.fail("payoffs", "expected an object keyed by signal pair");
  std::vector<BimatrixGame> stages;
  for (const std::string& a1 : signals[0]) {
    for (const std::string& a2 : signals[1]) {
      const std::string key = a1 + "," + a2;
      const auto it = payoffs.find(key);
      if (it == payoffs.end()) r.fail("payoffs." + key, "missing payoff table for signal pair");
      stages.emplace_back(strategies[0], strategies[1],
                          r.payoffs(*it, "payoffs." + key, strategies[0].size() * strategies[1].size()), names);
    }
  }
  if (payoffs.size() != pairs) r.fail("payoffs", "unexpected signal pair key (keys are \"<signal one>,<signal two>\")");
  try {
    PrivateInfoGame game(signals[0], signals[1], std::move(prior), std::move(stages));
    const std::size_t rows = detail::ipow(strategies[0].size(), signals[0].size());
    const std::size_t cols = detail::ipow(strategies[1].size(), signals[1].size());
    auto dists = r.distributions(root, rows, cols);
    return {std::move(game), std::move(dists)};
  } catch (const std::invalid_argument& e) {
    r.fail("signal_prior", e.what());
  }
}

}  // namespace detail

/// Parses either schema; the presence of "signals" selects the private-information one.
inline LoadedGame parse_game_document(const std::string& text, const std::string& source = "<input>") {
  const detail::Json root = detail::parse_document(text, source);
  const detail::Reader reader(source);
  if (!root.is_object()) reader.fail("", "expected a JSON object at top level");
  try {
    if (root.contains("signals")) return detail::read_private_info(root, reader);
    return detail::read_bimatrix(root, reader);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    reader.fail("", e.what());
  }
}

inline LoadedGame load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, std::nullopt, std::nullopt, "", "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_game_document(text.str(), path);
}

namespace detail {

inline Json payoffs_to_json(const std::vector<PayoffPair>& payoffs) {
  Json arr = Json::array();
  for (const PayoffPair& p : payoffs) arr.push_back({p.one, p.two});
  return arr;
}

}  // namespace detail

inline nlohmann::json game_to_json(const BimatrixGame& game) {
  nlohmann::json j;
  j["players"] = game.player_names();
  j["strategies"] =
      nlohmann::json::array({nlohmann::json(game.labels(Player::kOne)), nlohmann::json(game.labels(Player::kTwo))});
  j["payoffs"] = detail::payoffs_to_json(game.payoffs());
  return j;
}

inline nlohmann::json game_to_json(const PrivateInfoGame& game) {
  nlohmann::json j;
  j["players"] = game.player_names();
  j["strategies"] =
      nlohmann::json::array({nlohmann::json(game.strategies(Player::kOne)), nlohmann::json(game.strategies(Player::kTwo))});
  j["signals"] =
      nlohmann::json::array({nlohmann::json(game.signals(Player::kOne)), nlohmann::json(game.signals(Player::kTwo))});
  j["signal_prior"] = game.prior();
  nlohmann::json payoffs = nlohmann::json::object();
  for (std::size_t a1 = 0; a1 < game.num_signals(Player::kOne); ++a1) {
    for (std::size_t a2 = 0; a2 < game.num_signals(Player::kTwo); ++a2) {
      payoffs[game.signals(Player::kOne)[a1] + "," + game.signals(Player::kTwo)[a2]] =
          detail::payoffs_to_json(game.stage_game(a1, a2).payoffs());
    }
  }
  j["payoffs"] = std::move(payoffs);
  return j;
}

}  // namespace qgames
