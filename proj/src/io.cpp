#include "zdt/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "zdt/errors.hpp"

namespace zdt {

using nlohmann::json;

namespace {

template <typename T>
T require(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw InvalidSpec(std::string(what) + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidSpec(std::string(what) + " field \"" + key + "\" has the wrong type");
  }
}

}  // namespace

void to_json(json& j, const GameSpec& spec) {
  j = json{{"family", to_string(spec.family)}, {"n", spec.n}, {"m", spec.m}};
  if (spec.family == Family::ThresholdPGG) {
    j["r"] = spec.r;
  } else {
    j["b"] = spec.b;
  }
  j["c"] = spec.c;
}

void from_json(const json& j, GameSpec& spec) {
  if (!j.is_object()) throw InvalidSpec("game spec must be a JSON object");
  spec.family = parse_family(require<std::string>(j, "family", "game spec"));
  spec.n = require<int>(j, "n", "game spec");
  spec.m = require<int>(j, "m", "game spec");
  spec.c = j.contains("c") ? require<double>(j, "c", "game spec") : 1.0;
  if (spec.family == Family::ThresholdPGG) {
    spec.r = require<double>(j, "r", "game spec");
  } else {
    spec.b = require<double>(j, "b", "game spec");
  }
}

void to_json(json& j, const MemoryOneStrategy& strategy) {
  j = json{{"n", strategy.n}, {"probs", strategy.probs}, {"init", strategy.init}};
}

void from_json(const json& j, MemoryOneStrategy& strategy) {
  if (!j.is_object()) throw InvalidArgument("strategy must be a JSON object");
  try {
    strategy.n = j.at("n").get<int>();
    strategy.probs = j.at("probs").get<std::vector<double>>();
    strategy.init = j.at("init").get<double>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed strategy JSON: ") + e.what());
  }
}

void to_json(json& j, const ZDParameters& params) {
  j = json{{"s", params.s}, {"l", params.l}, {"phi", params.phi}, {"delta", params.delta}, {"p0", params.p0}};
}

void from_json(const json& j, ZDParameters& params) {
  try {
    params.s = j.at("s").get<double>();
    params.l = j.at("l").get<double>();
    params.phi = j.at("phi").get<double>();
    params.delta = j.at("delta").get<double>();
    params.p0 = j.at("p0").get<double>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ZD parameters JSON: ") + e.what());
  }
}

void to_json(json& j, const SlopeBound& bound) {
  j = json{{"s_star", bound.s_star}, {"strict", bound.strict}, {"class", to_string(bound.cls)}};
  if (bound.floored) j["floored"] = true;
}

json region_to_json(const RegionGrid& grid) {
  json cells = json::array();
  for (const auto& cell : grid.cells) {
    cells.push_back({{"family", to_string(grid.family)},
                     {"n", grid.n},
                     {"m", cell.m},
                     {"axis1_name", grid.axis1_name},
                     {"axis1_value", cell.axis1_value},
                     {"class", to_string(grid.cls)},
                     {"s_star_closed", cell.closed.s_star},
                     {"strict", cell.closed.strict},
                     {"s_star_oracle", cell.oracle.s_star},
                     {"discrepancy", cell.discrepancy},
                     {"strict_oracle", cell.oracle.strict}});
  }
  return json{{"family", to_string(grid.family)},
              {"n", grid.n},
              {"c", grid.c},
              {"class", to_string(grid.cls)},
              {"axis1_name", grid.axis1_name},
              {"axis1_values", grid.axis1_values},
              {"m_values", grid.m_values},
              {"max_discrepancy", grid.max_discrepancy},
              {"strict_mismatches", grid.strict_mismatches},
              {"cells", std::move(cells)}};
}

json outcome_to_json(const PayoffOutcome& outcome, std::optional<std::pair<double, double>> relation) {
  json j{{"method", to_string(outcome.method)},
         {"delta", outcome.delta},
         {"pi", outcome.pi},
         {"pi_focal", outcome.pi_focal},
         {"pi_coplayers_avg", outcome.pi_coplayers_avg}};
  if (outcome.seed) j["seed"] = *outcome.seed;
  if (outcome.method == PayoffMethod::MonteCarlo) {
    j["episodes"] = outcome.episodes;
    j["rng"] = kRngAlgorithm;
  }
  if (outcome.std_error) j["stderr"] = *outcome.std_error;
  if (relation) {
    j["s"] = relation->first;
    j["l"] = relation->second;
    j["residual"] = relation_residual(outcome, relation->first, relation->second);
  }
  return j;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace zdt
