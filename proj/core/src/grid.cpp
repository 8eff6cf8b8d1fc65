#include "shellgame/grid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

namespace shellgame {

std::string_view to_string(HumanChoice c) {
    switch (c) {
        case HumanChoice::Correct: return "correct";
        case HumanChoice::Incorrect: return "incorrect";
        case HumanChoice::Random: return "random";
    }
    return "?";
}

std::optional<HumanChoice> parse_human_choice(std::string_view s) {
    if (s == "correct") return HumanChoice::Correct;
    if (s == "incorrect") return HumanChoice::Incorrect;
    if (s == "random") return HumanChoice::Random;
    return std::nullopt;
}

std::string CellKey::label() const {
    return std::string(to_string(policy)) + "-" + std::string(to_string(choice));
}

void ExperimentGrid::validate() const {
    if (policies.empty()) throw ConfigError("grid: no policies selected");
    if (human_choices.empty()) throw ConfigError("grid: no human choices selected");
    if (replications < 1) throw ConfigError("grid: replications must be >= 1");
}

std::vector<CellKey> ExperimentGrid::cells() const {
    std::vector<CellKey> out;
    for (auto p : policies) {
        for (auto c : human_choices) {
            out.push_back({p, c});
        }
    }
    return out;
}

std::uint64_t stable_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t replication_seed(std::uint64_t base_seed, const CellKey& cell, int replication) {
    return base_seed + stable_hash(cell.label() + "/" + std::to_string(replication));
}

TrialSetup make_setup(const CellKey& cell, std::uint64_t seed) {
    // Raw engine output only: distributions are not portable across standard libraries.
    std::mt19937_64 rng(seed);
    TrialSetup s;
    s.policy = cell.policy;
    s.seed = seed;
    s.correct_button = (rng() >> 63) != 0 ? ButtonId::R : ButtonId::L;
    switch (cell.choice) {
        case HumanChoice::Correct: s.human_choice = s.correct_button; break;
        case HumanChoice::Incorrect: s.human_choice = s.incorrect_button(); break;
        case HumanChoice::Random: s.human_choice = (rng() >> 63) != 0 ? ButtonId::R : ButtonId::L; break;
    }
    return s;
}

std::string trial_id(const CellKey& cell, int replication) {
    return cell.label() + "-r" + std::to_string(replication);
}

SummaryRow summarize(const CellKey& cell, int replication, const TrialSetup& setup,
                     const TrialResult& result) {
    SummaryRow row;
    row.trial_id = trial_id(cell, replication);
    row.policy = cell.policy;
    row.human_choice = cell.choice;
    row.replication = replication;
    row.seed = setup.seed;
    row.correct_button = setup.correct_button;
    row.human_button = result.pressed_by(AgentId::Human);
    row.assistant_button = result.pressed_by(AgentId::Assistant);
    row.human_score = result.ledger.human;
    row.assistant_score = result.ledger.assistant;
    row.duration = result.duration();
    return row;
}

std::vector<TrialRecord> run_grid(const ExperimentGrid& grid, const ArenaSpec& arena,
                                  const SimConfig& config, unsigned workers) {
    grid.validate();
    arena.validate();
    config.validate();

    std::vector<TrialRecord> records;
    for (const auto& cell : grid.cells()) {
        for (int r = 0; r < grid.replications; ++r) {
            TrialRecord rec;
            rec.cell = cell;
            rec.replication = r;
            rec.setup = make_setup(cell, replication_seed(grid.base_seed, cell, r));
            records.push_back(std::move(rec));
        }
    }

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(records.size()));

    std::vector<std::exception_ptr> errors(records.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            TrialRecord& rec = records[i];
            try {
                rec.result = run_trial(arena, rec.setup, config);
                rec.row = summarize(rec.cell, rec.replication, rec.setup, rec.result);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!errors[i]) continue;
        std::string cause = "unknown error";
        try {
            std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
            cause = e.what();
        } catch (...) {
        }
        throw GridError("trial " + trial_id(records[i].cell, records[i].replication) + " failed: " + cause);
    }
    return records;
}

RewardLedger replay_scores(std::span<const TraceRecord> trace, const ArenaSpec& arena,
                           const TrialSetup& setup) {
    WorldState w;
    w.arena = arena;
    w.setup = setup;
    w.human.id = AgentId::Human;
    w.assistant.id = AgentId::Assistant;
    RewardLedger ledger;
    for (const auto& rec : trace) {
        w.human.position = rec.human.position;
        w.assistant.position = rec.assistant.position;
        while (auto press = detect_press(w)) {
            w.agent(press->agent).pressed = press->button;
            ledger = score_press(setup, *press, ledger);
        }
    }
    return ledger;
}

}  // namespace shellgame
