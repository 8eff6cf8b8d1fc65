#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shellgame/engine.hpp"
#include "shellgame/world.hpp"

namespace shellgame {

/// Which button the human initially heads for, relative to the correct one.
enum class HumanChoice : std::uint8_t { Correct, Incorrect, Random };

std::string_view to_string(HumanChoice c);
std::optional<HumanChoice> parse_human_choice(std::string_view s);

struct CellKey {
    DesirabilityPolicy policy = DesirabilityPolicy::Ethical;
    HumanChoice choice = HumanChoice::Correct;

    /// e.g. "ethical-incorrect"; also the SVG file stem.
    std::string label() const;
    bool operator==(const CellKey&) const = default;
};

struct ExperimentGrid {
    std::vector<DesirabilityPolicy> policies{kAllPolicies.begin(), kAllPolicies.end()};
    std::vector<HumanChoice> human_choices{HumanChoice::Correct, HumanChoice::Incorrect};
    int replications = 1;
    std::uint64_t base_seed = 0;

    void validate() const;
    /// Cells in run order: policies outer, choices inner.
    std::vector<CellKey> cells() const;
};

/// 64-bit FNV-1a; stable across platforms and runs.
std::uint64_t stable_hash(std::string_view bytes);

/// base_seed + stable_hash("<cell label>/<replication>").
std::uint64_t replication_seed(std::uint64_t base_seed, const CellKey& cell, int replication);

/// The seed decides which button is correct (and, for Random, the human's pick).
TrialSetup make_setup(const CellKey& cell, std::uint64_t seed);

std::string trial_id(const CellKey& cell, int replication);

struct SummaryRow {
    std::string trial_id;
    DesirabilityPolicy policy = DesirabilityPolicy::Ethical;
    HumanChoice human_choice = HumanChoice::Correct;
    int replication = 0;
    std::uint64_t seed = 0;
    ButtonId correct_button = ButtonId::L;
    std::optional<ButtonId> human_button;
    std::optional<ButtonId> assistant_button;
    int human_score = 0;
    int assistant_score = 0;
    double duration = 0.0;  // s
};

struct TrialRecord {
    CellKey cell;
    int replication = 0;
    TrialSetup setup;
    TrialResult result;
    SummaryRow row;
};

class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SummaryRow summarize(const CellKey& cell, int replication, const TrialSetup& setup,
                     const TrialResult& result);

/// Runs every (cell, replication) pair on up to `workers` threads (0 picks the
/// hardware concurrency). Results are ordered by cell, then replication.
std::vector<TrialRecord> run_grid(const ExperimentGrid& grid, const ArenaSpec& arena,
                                  const SimConfig& config, unsigned workers = 0);

/// Re-derives the press scores from recorded positions alone.
RewardLedger replay_scores(std::span<const TraceRecord> trace, const ArenaSpec& arena,
                           const TrialSetup& setup);

}  // namespace shellgame
