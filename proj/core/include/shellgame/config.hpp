#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "shellgame/engine.hpp"
#include "shellgame/world.hpp"

namespace shellgame {

/// Everything the flat `key = value` configuration file can set.
struct ExperimentConfig {
    ArenaSpec arena;
    SimConfig sim;

    void validate() const {
        arena.validate();
        sim.validate();
    }
};

/// Recognised configuration keys, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Sets one key. Throws ConfigError on unknown keys or malformed values.
void apply_config_entry(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Reads `key = value` lines on top of `base`. Blank lines and `#` comments
/// are ignored. The result is validated.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});

}  // namespace shellgame
