// qgames: command-line driver for the scenario reports, game-file checks and
// the acceptance suite.
//
// Exit status: 0 success, 1 a check failed, 2 usage error or malformed input.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgames/qgames.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and quantum equilibria of two-player games"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::uint64_t seed = qgames::kDefaultSeed;
  std::optional<double> theta;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--seed", seed, "Seed for randomized searches");
  app.add_option("--theta", theta, "Evaluate the rotation profile at this angle (radians) instead of the optimum");

  auto* chsh = app.add_subcommand("chsh", "Outcome tables of the CHSH measurement angles and the chain inequality");
  auto* cats = app.add_subcommand("cats-dogs", "Classical ceiling and quantum optimum of the cats/dogs game");
  auto* airline = app.add_subcommand("airline", "Airline pricing: equilibria, deviation tables, welfare, CE ceiling");
  std::string report = "all";
  std::string params_text;
  airline->add_option("--report", report, "all, classical, quantum, claims, welfare or ce");
  airline->add_option("--params", params_text, "x,y,L,H,F (entries may be fractions such as 108/19)");
  auto* check = app.add_subcommand("check-game", "Equilibrium queries on a JSON game file");
  std::string path;
  check->add_option("file", path, "Game file")->required();
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (theta && !std::isfinite(*theta)) throw std::invalid_argument("--theta must be finite");
    const qgames::OutputFormat out = qgames::parse_output_format(format);
    qgames::RunOptions opts;
    opts.seed = seed;
    opts.theta = theta;

    qgames::Report result;
    if (chsh->parsed()) {
      result = qgames::chsh_report();
    } else if (cats->parsed()) {
      result = qgames::cats_dogs_report(opts);
    } else if (airline->parsed()) {
      if (!params_text.empty()) opts.params = qgames::AirlineParameters::parse(params_text);
      result = qgames::airline_report(qgames::parse_airline_section(report), opts);
    } else if (check->parsed()) {
      result = qgames::check_game_report(qgames::load_game_file(path), opts);
    } else if (verify->parsed()) {
      result = qgames::acceptance_report(qgames::run_acceptance(seed));
    }
    qgames::render(std::cout, result, out);
    return result.ok ? 0 : kExitFailure;
  } catch (const qgames::ParseError& e) {
    std::cerr << "qgames: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qgames: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qgames: " << e.what() << '\n';
    return kExitFailure;
  }
}
