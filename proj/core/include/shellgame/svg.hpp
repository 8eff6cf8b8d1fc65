#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shellgame/engine.hpp"
#include "shellgame/world.hpp"

namespace shellgame {

/// Top view of one experiment cell: the arena, both buttons, and for every
/// replication the human and assistant trajectories with start markers and
/// a marker wherever the assistant starts pointing. A trajectory that never
/// moves is drawn as a single point marker.
std::string render_svg(std::span<const std::vector<TraceRecord>> traces, const ArenaSpec& arena,
                       std::string_view title);

void write_svg(const std::filesystem::path& path, std::span<const std::vector<TraceRecord>> traces,
               const ArenaSpec& arena, std::string_view title);

}  // namespace shellgame
