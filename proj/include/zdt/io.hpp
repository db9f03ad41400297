#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "zdt/games.hpp"
#include "zdt/regions.hpp"
#include "zdt/verify.hpp"
#include "zdt/zd_core.hpp"

namespace zdt {

// {"family": "pgg"|"sdg", "n", "m", "r" (pgg) or "b" (sdg), "c"}
void to_json(nlohmann::json& j, const GameSpec& spec);
// Missing or mistyped fields throw InvalidSpec. "c" defaults to 1.
void from_json(const nlohmann::json& j, GameSpec& spec);

// {"n", "probs": [2n], "init"}
void to_json(nlohmann::json& j, const MemoryOneStrategy& strategy);
void from_json(const nlohmann::json& j, MemoryOneStrategy& strategy);

// {"s", "l", "phi", "delta", "p0"}
void to_json(nlohmann::json& j, const ZDParameters& params);
void from_json(const nlohmann::json& j, ZDParameters& params);

void to_json(nlohmann::json& j, const SlopeBound& bound);

// Same columns as the CSV export, one object per cell, plus summary metadata.
nlohmann::json region_to_json(const RegionGrid& grid);

// Outcome with method, delta, seed, payoffs, standard errors and the RNG tag.
// The residual against (s, l) is included when given.
nlohmann::json outcome_to_json(const PayoffOutcome& outcome,
                               std::optional<std::pair<double, double>> relation = std::nullopt);

// Writes through a temporary sibling file and renames it into place.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace zdt
