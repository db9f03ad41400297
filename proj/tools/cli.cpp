#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zdt/errors.hpp"
#include "zdt/games.hpp"
#include "zdt/io.hpp"
#include "zdt/regions.hpp"
#include "zdt/verify.hpp"
#include "zdt/zd_core.hpp"

namespace zdt::cli {

using nlohmann::json;

namespace {

constexpr double kResidualThreshold = 1e-8;

// Error carrying an exit code; thrown by the command bodies.
struct Exit {
  int code;
  std::string message;
};

// Raw flag values. Unset flags are filled from the --config file, then from
// defaults at the point of use.
struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> out;

  std::optional<std::string> family;
  std::optional<int> n;
  std::vector<int> m;
  std::optional<double> r, b, c;

  std::optional<std::string> cls;
  std::optional<double> s, l, delta, phi, p0;

  std::optional<std::string> preset;
  std::optional<double> axis_min, axis_max, axis_step;
  std::optional<std::string> format;
  std::optional<unsigned> threads;

  std::optional<std::string> strategy;
  std::optional<std::string> opponent_file;
  std::optional<int> opponents;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> opponent_seed;
  std::optional<std::uint64_t> episodes;
};

const json* config_value(const json& config, const std::string& key) {
  std::string alt = key;
  std::replace(alt.begin(), alt.end(), '_', '-');
  for (const auto& k : {key, alt}) {
    if (config.contains(k)) return &config.at(k);
    if (config.contains("game") && config.at("game").is_object() && config.at("game").contains(k)) {
      return &config.at("game").at(k);
    }
  }
  return nullptr;
}

template <typename T>
void fill(std::optional<T>& slot, const json& config, const std::string& key) {
  if (slot) return;
  if (const json* v = config_value(config, key)) {
    try {
      slot = v->get<T>();
    } catch (const json::exception&) {
      throw Exit{kInvalid, "config field \"" + key + "\" has the wrong type"};
    }
  }
}

void merge_config(Flags& f) {
  if (!f.config) return;
  json config;
  try {
    config = json::parse(read_file(*f.config));
  } catch (const json::exception& e) {
    throw Exit{kInvalid, "config file is not valid JSON: " + std::string(e.what())};
  }
  if (!config.is_object()) throw Exit{kInvalid, "config file must hold a JSON object"};
  fill(f.out, config, "out");
  fill(f.family, config, "family");
  fill(f.n, config, "n");
  if (f.m.empty()) {
    if (const json* v = config_value(config, "m")) {
      try {
        f.m = v->is_array() ? v->get<std::vector<int>>() : std::vector<int>{v->get<int>()};
      } catch (const json::exception&) {
        throw Exit{kInvalid, "config field \"m\" has the wrong type"};
      }
    }
  }
  fill(f.r, config, "r");
  fill(f.b, config, "b");
  fill(f.c, config, "c");
  fill(f.cls, config, "class");
  fill(f.s, config, "s");
  fill(f.l, config, "l");
  fill(f.delta, config, "delta");
  fill(f.phi, config, "phi");
  fill(f.p0, config, "p0");
  fill(f.preset, config, "preset");
  fill(f.axis_min, config, "axis_min");
  fill(f.axis_max, config, "axis_max");
  fill(f.axis_step, config, "axis_step");
  fill(f.format, config, "format");
  fill(f.threads, config, "threads");
  fill(f.strategy, config, "strategy");
  fill(f.opponent_file, config, "opponent_file");
  fill(f.opponents, config, "opponents");
  fill(f.seed, config, "seed");
  fill(f.opponent_seed, config, "opponent_seed");
  fill(f.episodes, config, "episodes");
}

void add_game_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file (flags take precedence)");
  cmd->add_option("--family", f.family, "pgg or sdg");
  cmd->add_option("--n", f.n, "number of players");
  cmd->add_option("--m", f.m, "cooperator threshold");
  cmd->add_option("--r", f.r, "public goods multiplier (pgg)");
  cmd->add_option("--b", f.b, "benefit (sdg)");
  cmd->add_option("--c", f.c, "cost");
  cmd->add_option("--out", f.out, "output path (default: stdout)");
}

void add_zd_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--class", f.cls, "generous, extortionate or equalizer");
  cmd->add_option("--s", f.s, "slope");
  cmd->add_option("--l", f.l, "baseline payoff");
  cmd->add_option("--delta", f.delta, "discount factor");
  cmd->add_option("--phi", f.phi, "scaling phi (default: midpoint of the feasible interval)");
  cmd->add_option("--p0", f.p0, "initial cooperation probability");
}

GameSpec resolve_game(const Flags& f) {
  if (!f.family) throw InvalidSpec("--family is required");
  GameSpec spec;
  spec.family = parse_family(*f.family);
  if (!f.n) throw InvalidSpec("--n is required");
  spec.n = *f.n;
  if (f.m.size() != 1) throw InvalidSpec("exactly one --m is required");
  spec.m = f.m.front();
  spec.c = f.c.value_or(1.0);
  if (spec.family == Family::ThresholdPGG) {
    if (!f.r) throw InvalidSpec("--r is required for pgg");
    spec.r = *f.r;
  } else {
    if (!f.b) throw InvalidSpec("--b is required for sdg");
    spec.b = *f.b;
  }
  spec.validate();
  return spec;
}

void emit(const Flags& f, const std::string& content, std::ostream& out) {
  if (f.out) {
    atomic_write(*f.out, content);
  } else {
    out << content;
  }
}

// ---------------------------------------------------------------------------
// region

int cmd_region(Flags& f, std::ostream& out, std::ostream& err) {
  std::optional<RegionPreset> preset;
  if (f.preset) preset = region_preset(*f.preset);

  Family family;
  if (f.family) {
    family = parse_family(*f.family);
  } else if (preset) {
    family = preset->family;
  } else {
    throw InvalidSpec("--family or --preset is required");
  }
  ZdClass cls;
  if (f.cls) {
    cls = parse_class(*f.cls);
  } else if (preset) {
    cls = preset->cls;
  } else {
    throw InvalidArgument("--class or --preset is required");
  }
  if (cls == ZdClass::Equalizer) {
    throw InvalidArgument("region sweeps cover generous and extortionate classes (equalizers never exist)");
  }
  const int n = f.n.value_or(preset ? preset->n : 8);
  if (n < 3) throw InvalidSpec("n must satisfy n >= 3 for a threshold 1 < m < n");
  const double c = f.c.value_or(1.0);
  const bool pgg = family == Family::ThresholdPGG;
  const double axis_min = f.axis_min.value_or(preset ? preset->axis_min : 1.01);
  const double axis_max = f.axis_max.value_or(preset ? preset->axis_max : (pgg ? n - 0.01 : 10.0));
  const double axis_step = f.axis_step.value_or(preset ? preset->axis_step : 0.01);
  std::vector<int> ms = f.m;
  if (ms.empty()) {
    for (int m = 2; m < n; ++m) ms.push_back(m);
  }
  for (int m : ms) {
    if (!(1 < m && m < n)) {
      throw InvalidSpec("m must satisfy 1 < m < n (got m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
    }
  }
  const std::string format = f.format.value_or("csv");
  if (format != "csv" && format != "json") throw InvalidArgument("--format must be csv or json");

  const auto axis = axis_grid(axis_min, axis_max, axis_step);
  const auto grid = region_sweep(family, n, axis, ms, cls, c, f.threads.value_or(0));

  json config{{"command", "region"},
              {"family", to_string(family)},
              {"n", n},
              {"m", ms},
              {"c", c},
              {"class", to_string(cls)},
              {"axis_min", axis_min},
              {"axis_max", axis_max},
              {"axis_step", axis_step},
              {"format", format}};
  if (f.preset) config["preset"] = *f.preset;

  std::string content;
  if (format == "csv") {
    content = "# config: " + config.dump() + "\n" + to_csv(grid);
  } else {
    auto j = region_to_json(grid);
    j["config"] = config;
    content = j.dump(2) + "\n";
  }
  emit(f, content, out);
  err << "max closed-form vs oracle discrepancy: " << grid.max_discrepancy
      << " (strictness mismatches: " << grid.strict_mismatches << ")\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// construct

struct Construction {
  GameSpec game;
  std::optional<ZdClass> cls;
  ZDParameters params;
  PhiInterval interval;
  MemoryOneStrategy strategy;
};

Construction build_strategy(const Flags& f) {
  Construction out;
  out.game = resolve_game(f);
  const auto table = payoffs(out.game);
  if (f.cls) out.cls = parse_class(*f.cls);

  double s, l;
  if (out.cls == ZdClass::Equalizer) {
    if (f.s && *f.s != 0.0) throw InvalidArgument("equalizer strategies have s = 0");
    s = 0.0;
    if (f.l) {
      l = *f.l;
    } else {
      const auto bounds = l_bounds(table, 0.0);
      l = 0.5 * (bounds.lower + bounds.upper);
    }
  } else if (out.cls) {
    if (f.l) throw InvalidArgument("--l conflicts with --class (the class fixes the baseline)");
    l = preset_baseline(table, *out.cls);
    if (f.s) {
      s = *f.s;
    } else {
      const auto bound = closed_form_bound(out.game, *out.cls);
      s = 0.5 * (bound.s_star + 1.0);
    }
  } else {
    if (!f.s || !f.l) throw InvalidArgument("give --class, or both --s and --l");
    s = *f.s;
    l = *f.l;
  }

  if (!enforceable(table, s, l)) {
    std::ostringstream os;
    os << "not enforceable: (s, l) = (" << s << ", " << l << ") violates the baseline bounds or the slope range";
    throw Exit{kInfeasible, os.str()};
  }

  const double delta = f.delta.value_or(0.999);
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("--delta must lie in (0, 1)");
  double p0;
  if (f.p0) {
    p0 = *f.p0;
  } else if (out.cls && default_p0(*out.cls)) {
    p0 = *default_p0(*out.cls);
  } else {
    p0 = best_p0(table, s, l, delta).value_or(0.5);
  }
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw InvalidArgument("--p0 must lie in [0, 1]");

  const auto interval = feasible_phi_interval(table, s, l, delta, p0);
  if (!interval) {
    std::ostringstream os;
    os << "no feasible phi for delta = " << delta << ", p0 = " << p0;
    if (const auto dmin = min_enforceable_delta(table, s, l)) os << " (smallest workable delta ~ " << *dmin << ")";
    throw Exit{kInfeasible, os.str()};
  }
  out.interval = *interval;
  out.params = ZDParameters{s, l, f.phi.value_or(interval->midpoint()), delta, p0};
  try {
    out.strategy = construct_zd(table, out.params);
  } catch (const InfeasibleParameters& e) {
    throw Exit{kInfeasible, e.what()};
  }
  return out;
}

json construction_json(const Construction& c) {
  json j{{"game", c.game},
         {"params", c.params},
         {"phi_interval", {c.interval.lo, c.interval.hi}},
         {"phi_interval_lo_open", c.interval.lo_open},
         {"strategy", c.strategy}};
  if (c.cls) j["class"] = to_string(*c.cls);
  return j;
}

int cmd_construct(Flags& f, std::ostream& out, std::ostream&) {
  const auto c = build_strategy(f);
  auto j = construction_json(c);
  j["config"] = {{"command", "construct"}, {"game", c.game}, {"params", c.params}};
  if (c.cls) j["config"]["class"] = to_string(*c.cls);
  emit(f, j.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify / simulate

struct FocalSetup {
  GameSpec game;
  MemoryOneStrategy strategy;
  std::optional<double> s, l, delta;
};

FocalSetup resolve_focal(const Flags& f) {
  FocalSetup out;
  if (!f.strategy) {
    const auto c = build_strategy(f);
    return {c.game, c.strategy, c.params.s, c.params.l, c.params.delta};
  }
  json doc;
  try {
    doc = json::parse(read_file(*f.strategy));
  } catch (const json::exception& e) {
    throw InvalidArgument("strategy file is not valid JSON: " + std::string(e.what()));
  }
  if (doc.contains("strategy")) {
    out.strategy = doc.at("strategy").get<MemoryOneStrategy>();
    if (doc.contains("params")) {
      const auto params = doc.at("params").get<ZDParameters>();
      out.s = params.s;
      out.l = params.l;
      out.delta = params.delta;
    }
    if (f.family) {
      out.game = resolve_game(f);
    } else if (doc.contains("game")) {
      out.game = doc.at("game").get<GameSpec>();
      out.game.validate();
    } else {
      out.game = resolve_game(f);
    }
  } else {
    out.strategy = doc.get<MemoryOneStrategy>();
    out.game = resolve_game(f);
  }
  if (f.s) out.s = f.s;
  if (f.l) out.l = f.l;
  if (f.delta) out.delta = f.delta;
  out.strategy.validate();
  if (out.strategy.n != out.game.n) throw InvalidArgument("strategy n does not match the game's n");
  return out;
}

// Opponent profiles: from --opponent-file (one profile or a list of profiles)
// or `count` random profiles derived from `seed`.
std::vector<std::vector<MemoryOneStrategy>> resolve_opponents(const Flags& f, int n, int count, std::uint64_t seed) {
  std::vector<std::vector<MemoryOneStrategy>> profiles;
  if (f.opponent_file) {
    json doc = json::parse(read_file(*f.opponent_file));
    if (doc.is_object() && doc.contains("opponents")) doc = doc.at("opponents");
    if (!doc.is_array() || doc.empty()) throw InvalidArgument("opponent file must hold a non-empty array");
    if (doc.front().is_array()) {
      for (const auto& p : doc) profiles.push_back(p.get<std::vector<MemoryOneStrategy>>());
    } else {
      profiles.push_back(doc.get<std::vector<MemoryOneStrategy>>());
    }
    for (const auto& p : profiles) {
      if (static_cast<int>(p.size()) != n - 1) {
        throw InvalidArgument("each opponent profile needs n - 1 = " + std::to_string(n - 1) + " strategies");
      }
    }
    return profiles;
  }
  for (int k = 0; k < count; ++k) {
    std::vector<MemoryOneStrategy> opp;
    for (int j = 1; j < n; ++j) {
      opp.push_back(random_memory_one(n, derive_seed(derive_seed(seed, static_cast<std::uint64_t>(k)), j)));
    }
    profiles.push_back(std::move(opp));
  }
  return profiles;
}

StrategyProfile make_profile(const MemoryOneStrategy& focal, const std::vector<MemoryOneStrategy>& opp) {
  StrategyProfile profile;
  profile.strategies.push_back(focal);
  profile.strategies.insert(profile.strategies.end(), opp.begin(), opp.end());
  profile.validate();
  return profile;
}

int cmd_verify(Flags& f, std::ostream& out, std::ostream& err) {
  const auto setup = resolve_focal(f);
  if (!setup.s || !setup.l) throw InvalidArgument("verification needs the enforced relation: give --s and --l");
  if (!setup.delta) throw InvalidArgument("--delta is required");
  const int n = setup.game.n;
  if (n > kMaxExactPlayers) {
    throw StateSpaceTooLarge("n = " + std::to_string(n) + " exceeds the exact-solver limit of " +
                             std::to_string(kMaxExactPlayers) + " players; use `zdt simulate` instead");
  }
  const int count = f.opponents.value_or(100);
  if (count < 1) throw InvalidArgument("--opponents must be >= 1");
  const std::uint64_t seed = f.seed.value_or(42);
  const auto table = payoffs(setup.game);
  const auto profiles = resolve_opponents(f, n, count, seed);

  double max_abs = 0.0;
  json samples = json::array();
  for (const auto& opp : profiles) {
    const auto outcome = exact_discounted_payoffs(make_profile(setup.strategy, opp), table, *setup.delta);
    const double res = relation_residual(outcome, *setup.s, *setup.l);
    max_abs = std::max(max_abs, std::abs(res));
    samples.push_back({{"pi", outcome.pi},
                       {"pi_focal", outcome.pi_focal},
                       {"pi_coplayers_avg", outcome.pi_coplayers_avg},
                       {"residual", res}});
  }
  const bool passed = max_abs < kResidualThreshold;
  json report{{"config",
               {{"command", "verify"},
                {"game", setup.game},
                {"s", *setup.s},
                {"l", *setup.l},
                {"delta", *setup.delta},
                {"opponents", static_cast<int>(profiles.size())},
                {"seed", seed}}},
              {"strategy", setup.strategy},
              {"max_abs_residual", max_abs},
              {"threshold", kResidualThreshold},
              {"passed", passed},
              {"samples", std::move(samples)}};
  if (f.opponent_file) report["config"]["opponent_file"] = *f.opponent_file;
  emit(f, report.dump(2) + "\n", out);
  err << "max |residual| = " << max_abs << (passed ? " (pass)" : " (FAIL)") << '\n';
  return passed ? kOk : kVerifyFailed;
}

int cmd_simulate(Flags& f, std::ostream& out, std::ostream& err) {
  if (f.episodes && *f.episodes < 1) throw InvalidArgument("--episodes must be >= 1");
  const auto setup = resolve_focal(f);
  if (!setup.delta) throw InvalidArgument("--delta is required");
  const int n = setup.game.n;
  const std::uint64_t episodes = f.episodes.value_or(200000);
  const std::uint64_t seed = f.seed.value_or(7);
  const std::uint64_t opponent_seed = f.opponent_seed.value_or(42);
  const auto table = payoffs(setup.game);
  const auto opponents = resolve_opponents(f, n, 1, opponent_seed);
  const auto profile = make_profile(setup.strategy, opponents.front());

  const auto mc = simulate_monte_carlo(profile, table, *setup.delta, episodes, seed, f.threads.value_or(0));
  std::optional<std::pair<double, double>> relation;
  if (setup.s && setup.l) relation = std::make_pair(*setup.s, *setup.l);
  json report = outcome_to_json(mc, relation);
  report["config"] = {{"command", "simulate"},
                      {"game", setup.game},
                      {"delta", *setup.delta},
                      {"episodes", episodes},
                      {"seed", seed},
                      {"opponent_seed", opponent_seed}};
  if (f.opponent_file) report["config"]["opponent_file"] = *f.opponent_file;
  report["strategy"] = setup.strategy;
  report["opponents"] = opponents.front();

  if (n <= kMaxExactPlayers) {
    const auto exact = exact_discounted_payoffs(profile, table, *setup.delta);
    json z = json::array();
    bool within = true;
    for (std::size_t j = 0; j < exact.pi.size(); ++j) {
      const double se = (*mc.std_error)[j];
      const double diff = mc.pi[j] - exact.pi[j];
      const double score = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
      within = within && std::abs(score) <= 4.0;
      z.push_back(std::isfinite(score) ? json(score) : json(nullptr));
    }
    report["exact"] = outcome_to_json(exact, relation);
    report["z_scores"] = std::move(z);
    report["within_4_stderr"] = within;
    err << "Monte Carlo vs exact: " << (within ? "all players within 4 standard errors" : "some player outside 4 standard errors")
        << '\n';
  }
  emit(f, report.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(Flags& f, std::ostream& out, std::ostream&) {
  const auto spec = resolve_game(f);
  const auto table = payoffs(spec);
  const auto report = check_social_dilemma(table);

  auto row = [](std::span<const double> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
  };
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };

  if (f.out) {
    json violations = json::array();
    for (const auto& [cond, z] : report.violations) violations.push_back({{"condition", to_string(cond)}, {"z", z}});
    json j{{"config", {{"command", "check"}, {"game", spec}}},
           {"a", std::vector<double>(table.cooperator().begin(), table.cooperator().end())},
           {"b", std::vector<double>(table.defector().begin(), table.defector().end())},
           {"monotone", report.monotone},
           {"defector_advantage", report.defector_advantage},
           {"cooperation_favored", report.cooperation_favored},
           {"violations", std::move(violations)}};
    atomic_write(*f.out, j.dump(2) + "\n");
  }
  out << "game: " << json(spec).dump() << '\n'
      << "a (cooperator, z = 0..n-1): " << row(table.cooperator()) << '\n'
      << "b (defector,   z = 0..n-1): " << row(table.defector()) << '\n'
      << "monotone:            " << mark(report.monotone) << '\n'
      << "defector_advantage:  " << mark(report.defector_advantage) << '\n'
      << "cooperation_favored: " << mark(report.cooperation_favored) << '\n';
  for (const auto& [cond, z] : report.violations) out << "  violation: " << to_string(cond) << " at z = " << z << '\n';
  return report.all() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-determinant strategies for repeated threshold public goods and snowdrift games", "zdt"};
  app.require_subcommand(1);
  Flags f;

  auto* region = app.add_subcommand("region", "sweep feasible slope bounds over (axis, m) grids");
  add_game_options(region, f);
  region->add_option("--class", f.cls, "generous or extortionate");
  region->add_option("--preset", f.preset, "fig1-left, fig1-right, fig2-left or fig2-right");
  region->add_option("--axis-min", f.axis_min, "first r (pgg) or b/c (sdg) value");
  region->add_option("--axis-max", f.axis_max, "last r (pgg) or b/c (sdg) value");
  region->add_option("--axis-step", f.axis_step, "axis resolution");
  region->add_option("--format", f.format, "csv or json");
  region->add_option("--threads", f.threads, "worker threads (0 = all cores)");

  auto* construct = app.add_subcommand("construct", "build a ZD memory-one strategy");
  add_game_options(construct, f);
  add_zd_options(construct, f);

  auto* verify = app.add_subcommand("verify", "check the enforced relation exactly against memory-one opponents");
  add_game_options(verify, f);
  add_zd_options(verify, f);
  verify->add_option("--strategy", f.strategy, "strategy JSON (bare or a construct artifact)");
  verify->add_option("--opponents", f.opponents, "number of random opponent profiles (default 100)");
  verify->add_option("--opponent-file", f.opponent_file, "explicit opponent strategies (JSON)");
  verify->add_option("--seed", f.seed, "seed for random opponents (default 42)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate with geometric stopping");
  add_game_options(simulate, f);
  add_zd_options(simulate, f);
  simulate->add_option("--strategy", f.strategy, "strategy JSON (bare or a construct artifact)");
  simulate->add_option("--opponent-file", f.opponent_file, "explicit opponent strategies (JSON)");
  simulate->add_option("--opponent-seed", f.opponent_seed, "seed for random opponents (default 42)");
  simulate->add_option("--episodes", f.episodes, "number of episodes (default 200000)");
  simulate->add_option("--seed", f.seed, "simulation seed (default 7)");
  simulate->add_option("--threads", f.threads, "worker threads (0 = all cores)");

  auto* check = app.add_subcommand("check", "print the payoff table and check the social-dilemma conditions");
  add_game_options(check, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    merge_config(f);
    if (*region) return cmd_region(f, out, err);
    if (*construct) return cmd_construct(f, out, err);
    if (*verify) return cmd_verify(f, out, err);
    if (*simulate) return cmd_simulate(f, out, err);
    if (*check) return cmd_check(f, out, err);
    return kInvalid;
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const SlopeOutOfRange& e) {
    err << "error: not enforceable: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NotEnforceable& e) {
    err << "error: not enforceable: " << e.what() << '\n';
    return kInfeasible;
  } catch (const StateSpaceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace zdt::cli
