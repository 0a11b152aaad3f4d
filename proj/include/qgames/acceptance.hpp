#pragma once

// End-to-end acceptance checks with their tolerances. Each check recomputes
// its numbers from scratch and compares against closed forms.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qgames/classical_games.hpp"
#include "qgames/equilibrium_search.hpp"
#include "qgames/private_info.hpp"
#include "qgames/properties.hpp"
#include "qgames/report.hpp"
#include "qgames/scenarios.hpp"

namespace qgames {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace acceptance {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Accumulates named sub-checks into a pass flag and a one-line detail.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    passed_ = passed_ && ok;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += what + (ok ? "" : " [FAIL]");
  }

  void expect_near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(12);
    os << what << " = " << got;
    if (!near(got, want, tol)) os << " (want " << want << " +/- " << tol << ")";
    expect(near(got, want, tol), os.str());
  }

  void expect_equal(double got, double want, const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << got;
    if (got != want) os << " (want exactly " << want << ")";
    expect(got == want, os.str());
  }

  bool passed() const { return passed_; }
  const std::string& detail() const { return detail_; }

 private:
  bool passed_ = true;
  std::string detail_;
};

inline void chsh(Ledger& l) {
  const double low = std::pow(std::sin(std::numbers::pi / 8), 2);
  const double high = std::pow(std::sin(3 * std::numbers::pi / 8), 2);
  const ChshChart chart = chsh_chart();
  l.expect_near(chart.tables[0].disagreement(), high, 1e-12, "C,C");
  l.expect_near(chart.tables[1].disagreement(), low, 1e-12, "C,D");
  l.expect_near(chart.tables[2].disagreement(), low, 1e-12, "D,C");
  l.expect_near(chart.tables[3].disagreement(), low, 1e-12, "D,D");
  l.expect(chart.chain_violated, "chain inequality violated");
}

inline void classical_ceiling(Ledger& l) {
  const BimatrixGame sharp = associated_game(cats_dogs().game);
  double best = -INFINITY;
  std::size_t profiles = 0;
  for (std::size_t i = 0; i < sharp.rows(); ++i) {
    for (std::size_t j = 0; j < sharp.cols(); ++j, ++profiles) {
      const PayoffPair& p = sharp.payoff(i, j);
      if (p.one == p.two) best = std::max(best, p.one);
    }
  }
  l.expect(profiles == 16, std::to_string(profiles) + " profiles");
  l.expect_equal(best, 0.75, "max common payoff");
}

inline void cats_dogs_quantum(Ledger& l, std::uint64_t seed) {
  const Scenario sc = cats_dogs();
  const ThetaOptimum opt = optimize_theta(sc.structure);
  l.expect_near(opt.theta, std::numbers::pi / 8, 1e-6, "theta*");
  l.expect_near(opt.value, std::pow(std::cos(std::numbers::pi / 8), 2), 1e-9, "value");
  VerifyOptions vo;
  vo.seed = seed;
  l.expect(verify_equilibrium(sc.structure, ThetaProfile(opt.theta), vo).verdict, "verdict");
}

inline void airline_classical(Ledger& l) {
  const ClassicalEquilibrium eq = airline_classical_equilibrium(airline());
  l.expect(eq.pure_equilibria == 1, "unique pure equilibrium");
  l.expect(eq.label_one == "N:L|P:L" && eq.label_two == "N:L|P:L", "always-L (" + eq.label_one + ")");
  l.expect_equal(eq.value[0], 15.25, "firm one");
  l.expect_equal(eq.value[1], 15.25, "firm two");
}

inline void airline_quantum(Ledger& l, std::uint64_t seed) {
  const double r79 = std::sqrt(79.0);
  const Scenario sc = airline();
  const ThetaOptimum opt = optimize_theta(sc.structure);
  l.expect_near(opt.value, (3087 + 79 * r79) / 112, 1e-9, "value");
  l.expect_near(opt.theta, std::acos(0.5 * std::sqrt((14 + r79) / 7)), 1e-6, "theta*");
  VerifyOptions vo;
  vo.seed = seed;
  const EquilibriumReport rep = verify_equilibrium(sc.structure, ThetaProfile(opt.theta), vo);
  for (const DeviationRow& d : rep.deviations) {
    if (d.player != Player::kOne) continue;
    const std::string tag = d.signal == 0 ? "N " : "P ";
    if (d.signal == 0) {
      l.expect_near(d.pure[0], 30.25, 1e-9, tag + "L");
      l.expect_near(d.pure[1], 15.0, 1e-9, tag + "H");
      l.expect_near(d.equilibrium, (181 + 7 * r79) / 8, 1e-9, tag + "quantum");
    } else {
      l.expect_near(d.pure[0], 35.0, 1e-9, tag + "L");
      l.expect_near(d.pure[1], 30.0, 1e-9, tag + "H");
      l.expect_near(d.equilibrium, 32.5 + 15 * r79 / 28, 1e-9, tag + "quantum");
    }
  }
  l.expect(rep.verdict, "deviation-proof");
}

inline void welfare(Ledger& l) {
  const AirlineParameters params;
  const WelfareReport c = welfare_report(params, Regime::kClassical);
  const WelfareReport q = welfare_report(params, Regime::kQuantum);
  const WelfareReport k = welfare_report(params, Regime::kCollusion);
  l.expect_equal(c.consumer_surplus, 133.5, "classical consumer");
  l.expect_equal(c.producer_surplus, 30.5, "classical producer");
  l.expect_near(q.consumer_surplus, 78.94, 0.01, "quantum consumer");
  l.expect_near(q.producer_surplus, 67.66, 0.01, "quantum producer");
  l.expect_equal(k.consumer_surplus, 0.0, "collusion consumer");
  l.expect_equal(k.producer_surplus, 102.5, "collusion producer");
}

inline void ce_ceiling(Ledger& l) {
  const BimatrixGame sharp = associated_game(airline().game);
  const CeOptimum ce = ce_polytope_optimize(sharp, total_payoff_objective(sharp));
  l.expect_near(ce.value, 30.5, 1e-9, "max total payoff");
  const std::size_t always_l = sharp.strategy_index(Player::kOne, "N:L|P:L");
  l.expect(is_correlated_equilibrium(sharp, ProfileDistribution::point_mass(sharp.rows(), sharp.cols(), always_l,
                                                                             sharp.strategy_index(Player::kTwo, "N:L|P:L"))),
           "always-L point mass feasible");
}

inline void anticoordination(Ledger& l) {
  const AnticoordinationScenario s = anticoordination_scenario();
  const ProfileDistribution dx = induced_distribution(s.space, s.x, s.w);
  const ProfileDistribution dy = induced_distribution(s.space, s.y, s.w);
  l.expect(is_correlated_equilibrium(s.game, dx), "(X,W) correlated equilibrium");
  l.expect(is_correlated_equilibrium(s.game, dy), "(Y,W) correlated equilibrium");
  l.expect(!is_nash_in_environment(s.game, s.environment, s.x, s.w), "(X,W) not Nash in E");
  l.expect(is_nash_in_environment(s.game, s.environment, s.y, s.w), "(Y,W) Nash in E");
  l.expect_equal(expected_payoffs(s.game, dx).one, 1.125, "payoff under X");
  l.expect_equal(expected_payoffs(s.game, dy).one, 1.25, "payoff under Y");
}

inline void properties(Ledger& l, std::uint64_t seed) {
  auto summary = [](const char* name, const PropertyOutcome& o) {
    std::ostringstream os;
    os.precision(3);
    os << name << " " << (o.trials - o.failures) << "/" << o.trials << " (worst " << o.worst << ")";
    return os.str();
  };
  const auto ns = no_signaling_check(1000, seed);
  l.expect(ns.passed(), summary("no-signaling", ns));
  const auto landau = landau_forward_check(10000, seed + 1);
  l.expect(landau.passed(), summary("arcsine inclusion", landau));
  const auto forcing = diagonal_forcing_check(1000, seed + 2);
  l.expect(forcing.passed(), summary("forcing", forcing));
  const auto kuhn = kuhn_property(100, seed + 3);
  l.expect(kuhn.passed(), summary("Kuhn", kuhn));
  const auto ms_cd = multistart_ceiling_check(cats_dogs().structure, 200, seed + 4);
  l.expect(ms_cd.passed(), summary("multistart cats/dogs", ms_cd));
  const auto ms_air = multistart_ceiling_check(airline().structure, 200, seed + 5);
  l.expect(ms_air.passed(), summary("multistart airline", ms_air));
}

inline void extension_refutation(Ledger& l) {
  const Scenario sc = cats_dogs();
  const BimatrixGame sharp = associated_game(sc.game);
  std::vector<BehavioralProfile> profiles = pure_behavioral_profiles(sc.game);
  profiles.push_back(ThetaProfile(std::numbers::pi / 8).to_behavioral());
  const auto sample = behavioral_payoff_sample(sc.game, TwoQubitState::maximally_entangled(), profiles);
  const auto witness = first_extension_violation(sharp, sample);
  l.expect(!is_stochastic_extension(sharp, sample), "G(xi)# is not an extension of G#");
  if (witness) {
    const double v = sample[*witness].one;
    double ceiling = -INFINITY;
    for (const PayoffPair& p : sharp.payoffs()) ceiling = std::max(ceiling, p.one);
    std::ostringstream os;
    os.precision(4);
    os << "witness " << v << " > " << ceiling;
    l.expect(v > ceiling && near(v, 0.8536, 1e-4), os.str());
  } else {
    l.expect(false, "no witness");
  }
}

}  // namespace acceptance

/// Runs every criterion; the property suites draw from `seed`.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20111201) {
  using Check = std::function<void(acceptance::Ledger&)>;
  const std::vector<std::pair<std::string, Check>> checks{
      {"CHSH chart", acceptance::chsh},
      {"cats/dogs classical ceiling", acceptance::classical_ceiling},
      {"cats/dogs quantum optimum", [&](acceptance::Ledger& l) { acceptance::cats_dogs_quantum(l, seed); }},
      {"airline classical equilibrium", acceptance::airline_classical},
      {"airline quantum equilibrium", [&](acceptance::Ledger& l) { acceptance::airline_quantum(l, seed); }},
      {"airline welfare", acceptance::welfare},
      {"correlated-equilibrium ceiling", acceptance::ce_ceiling},
      {"anti-coordination environment", acceptance::anticoordination},
      {"property suites", [&](acceptance::Ledger& l) { acceptance::properties(l, seed); }},
      {"stochastic-extension refutation", acceptance::extension_refutation},
  };
  std::vector<CriterionResult> out;
  int id = 0;
  for (const auto& [name, check] : checks) {
    CriterionResult r;
    r.id = ++id;
    r.name = name;
    acceptance::Ledger ledger;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(ledger);
      r.passed = ledger.passed();
      r.detail = ledger.detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = ledger.detail() + (ledger.detail().empty() ? "" : "; ") + "exception: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline Report acceptance_report(const std::vector<CriterionResult>& results) {
  Report r{"verify", {}, true};
  for (const CriterionResult& c : results) {
    const std::string section = "criterion " + std::to_string(c.id);
    r.add(section, "name", c.name);
    r.check(section, "passed", c.passed);
    r.add(section, "detail", c.detail);
    r.add(section, "seconds", c.seconds);
  }
  return r;
}

}  // namespace qgames
