#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "qgames/io.hpp"
#include "qgames/reports.hpp"

namespace qgames {
namespace {

std::string samples(const char* name) { return std::string(QGAMES_SAMPLES_DIR) + "/" + name; }
std::string data(const char* name) { return std::string(QGAMES_TEST_DATA_DIR) + "/" + name; }

ParseError parse_failure(const std::string& text) {
  try {
    parse_game_document(text, "doc");
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "document parsed: " << text;
  return ParseError("doc", std::nullopt, std::nullopt, "", "");
}

TEST(GameFiles, LoadsBimatrixWithDistributions) {
  const auto loaded = load_game_file(samples("anticoordination.json"));
  const GameFile& f = std::get<GameFile>(loaded);
  EXPECT_EQ(f.game.payoff(0, 1), (PayoffPair{2, 1}));
  ASSERT_EQ(f.distributions.size(), 3u);
  EXPECT_EQ(f.distributions[0].expect, DistributionExpectation::kCorrelatedEquilibrium);
  EXPECT_DOUBLE_EQ(f.distributions[1].distribution.at(0, 1), 5.0 / 12);
}

TEST(GameFiles, LoadsPrivateInformationGames) {
  const auto loaded = load_game_file(samples("airline.json"));
  const PrivateInfoFile& f = std::get<PrivateInfoFile>(loaded);
  EXPECT_EQ(f.game.signals(Player::kTwo)[1], "P");
  EXPECT_DOUBLE_EQ(f.game.prior(1, 0), 0.25);
  const auto ps = PayoffStructure::from_game(f.game);
  ASSERT_TRUE(ps.has_value());
  EXPECT_EQ(ps->any_d(), airline().structure.any_d());
  EXPECT_EQ(ps->both_c(), airline().structure.both_c());
}

TEST(GameFiles, RoundTripThroughJson) {
  const Scenario sc = cats_dogs();
  const auto loaded = parse_game_document(game_to_json(sc.game).dump());
  const PrivateInfoGame& g = std::get<PrivateInfoFile>(loaded).game;
  EXPECT_EQ(g.signals(Player::kOne), sc.game.signals(Player::kOne));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(g.stage_games()[k].payoffs(), sc.game.stage_games()[k].payoffs());

  const BimatrixGame b = anticoordination_scenario().game;
  const auto again = parse_game_document(game_to_json(b).dump());
  EXPECT_EQ(std::get<GameFile>(again).game.payoffs(), b.payoffs());
}

TEST(GameFiles, SyntaxErrorsCarryLineAndColumn) {
  try {
    load_game_file(data("syntax_error.json"));
    FAIL();
  } catch (const ParseError& e) {
    ASSERT_TRUE(e.line().has_value());
    EXPECT_EQ(*e.line(), 4u);
    EXPECT_TRUE(e.column().has_value());
  }
}

TEST(GameFiles, StructuralErrorsNameTheField) {
  EXPECT_EQ(parse_failure(R"({"strategies": [["a"], ["b"]], "payoffs": [[1, "x"]]})").field(), "payoffs[0][1]");
  EXPECT_EQ(parse_failure(R"({"strategies": [["a"], ["b"]]})").field(), "payoffs");
  EXPECT_EQ(parse_failure(R"({"strategies": [["a", "a"], ["b"]], "payoffs": []})").field(), "strategies[0][1]");
  EXPECT_EQ(parse_failure(R"({"strategies": [["a"], ["b"]], "payoffs": [[1, 1], [2, 2]]})").field(), "payoffs");
  EXPECT_EQ(parse_failure(R"({"strategies": [["a"], ["b"]], "payoffs": [[1, 1]],
                              "distributions": [{"name": "d", "probabilities": [0.5]}]})")
                .field(),
            "distributions[0].probabilities");
  EXPECT_EQ(parse_failure(R"({"strategies": [["a"], ["b"]], "signals": [["x"], ["y"]],
                              "payoffs": {"x,z": [[1, 1]]}})")
                .field(),
            "payoffs.x,y");
  EXPECT_EQ(parse_failure(R"({"strategies": [["a"], ["b"]], "signals": [["x", "w"], ["y"]],
                              "signal_prior": [0.7, 0.7], "payoffs": {"x,y": [[1, 1]], "w,y": [[0, 0]]}})")
                .field(),
            "signal_prior");
  EXPECT_EQ(parse_failure("[1, 2]").field(), "");
}

TEST(Reports, JsonRoundTripReproducesValues) {
  for (const Report& r : {cats_dogs_report(), airline_report(AirlineSection::kWelfare), chsh_report()}) {
    const Report back = report_from_json(nlohmann::ordered_json::parse(to_json(r).dump()));
    ASSERT_EQ(back.rows.size(), r.rows.size());
    EXPECT_EQ(back.ok, r.ok);
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      EXPECT_EQ(back.rows[k].section, r.rows[k].section);
      EXPECT_EQ(back.rows[k].key, r.rows[k].key);
      EXPECT_EQ(back.rows[k].value, r.rows[k].value) << r.rows[k].key;
    }
  }
}

TEST(Reports, RecomputationMatchesEmittedDocument) {
  const std::string emitted = to_json(cats_dogs_report()).dump();
  const Report parsed = report_from_json(nlohmann::ordered_json::parse(emitted));
  const Report again = cats_dogs_report();
  EXPECT_EQ(*parsed.find("quantum", "theta_star"), *again.find("quantum", "theta_star"));
  EXPECT_EQ(*parsed.find("quantum", "value"), *again.find("quantum", "value"));
}

TEST(Reports, CsvHasHeaderAndOneRowPerLine) {
  const Report r = airline_report(AirlineSection::kCe);
  std::ostringstream os;
  render(os, r, OutputFormat::kCsv);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "section,key,value");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, r.rows.size());
  EXPECT_NE(os.str().find("ce,max_total_payoff,30.5"), std::string::npos);
}

TEST(Reports, CheckGameFlagsFailedExpectations) {
  EXPECT_TRUE(check_game_report(load_game_file(samples("anticoordination.json"))).ok);
  EXPECT_FALSE(check_game_report(load_game_file(data("wrong_expectation.json"))).ok);
  const Report cd = check_game_report(load_game_file(samples("cats_dogs.json")));
  EXPECT_NEAR(std::get<double>(*cd.find("correlated", "max_total_payoff")), 1.5, 1e-12);
  EXPECT_NEAR(std::get<double>(*cd.find("quantum", "theta_star")), std::numbers::pi / 8, 1e-9);
}

TEST(Reports, FormatParsing) {
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::kCsv);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
  EXPECT_THROW(parse_airline_section("profits"), std::invalid_argument);
}

}  // namespace
}  // namespace qgames
