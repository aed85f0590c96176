#pragma once

// JSON configuration: root-system blocks and the CLI run configuration.

#include "dunkl/kernels.hpp"
#include "dunkl/reflection.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

/// {"type": "catalogue", "name": ..., "multiplicity": [...]} or
/// {"type": "explicit", "roots": [[...], ...], "multiplicity": [...]}.
RootSystem root_system_from_json(const nlohmann::json& j);
/// Multiplicities are written one per positive root.
nlohmann::json root_system_to_json(const RootSystem& rs);

struct RunConfig {
    nlohmann::json root_system;
    int degree = 6;
    KernelConfig kernel;
    std::vector<std::string> checks;
    std::uint64_t seed = 20240917;
    std::string out_dir = ".";
    std::string cache_dir;
    bool timing = false;
};

/// Validates against the published schema (docs/config.schema.json); ConfigError on failure.
RunConfig parse_run_config(const nlohmann::json& j);
nlohmann::json run_config_to_json(const RunConfig& cfg);

}  // namespace dunkl
