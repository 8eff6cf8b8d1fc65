#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <filesystem>
#include <random>
#include <sstream>

#include "shellgame/config.hpp"
#include "shellgame/grid.hpp"
#include "shellgame/svg.hpp"
#include "shellgame/trace_csv.hpp"

namespace shellgame {
namespace {

namespace fs = std::filesystem;

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

TEST(Config, ParsesKeysCommentsAndBlankLines) {
    std::istringstream in(
        "# arena\n"
        "press_radius = 0.12\n"
        "\n"
        "beta=12   # steeper\n"
        "  layer_period = 15\n"
        "button_r_x = 0.6\n");
    const ExperimentConfig c = parse_config(in);
    EXPECT_DOUBLE_EQ(c.arena.press_radius, 0.12);
    EXPECT_DOUBLE_EQ(c.sim.sigmoid.beta, 12.0);
    EXPECT_EQ(c.sim.layer_period, 15);
    EXPECT_DOUBLE_EQ(c.arena.button(ButtonId::R).x, 0.6);
    EXPECT_DOUBLE_EQ(c.sim.sigmoid.t, 0.25);
}

TEST(Config, EveryDocumentedKeyIsAccepted) {
    for (auto key : config_keys()) {
        ExperimentConfig c;
        EXPECT_NO_THROW(apply_config_entry(c, key, "1")) << key;
    }
}

TEST(Config, Errors) {
    std::istringstream unknown("gamma = 3\n");
    EXPECT_THROW(parse_config(unknown), ConfigError);
    std::istringstream malformed("beta = ten\n");
    EXPECT_THROW(parse_config(malformed), ConfigError);
    std::istringstream no_eq("beta 10\n");
    EXPECT_THROW(parse_config(no_eq), ConfigError);
    std::istringstream invalid("press_radius = 0.9\n");
    EXPECT_THROW(parse_config(invalid), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/shellgame.conf"), ConfigError);
}

TEST(Config, ErrorNamesTheLine) {
    std::istringstream in("beta = 10\nbogus = 1\n");
    try {
        parse_config(in);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

// ---------------------------------------------------------------------------
// Grid
// ---------------------------------------------------------------------------

TEST(Grid, SeedsAreStableAndDistinct) {
    const CellKey a{DesirabilityPolicy::Ethical, HumanChoice::Correct};
    const CellKey b{DesirabilityPolicy::Ethical, HumanChoice::Incorrect};
    EXPECT_EQ(stable_hash(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(replication_seed(7, a, 0), 7 + stable_hash("ethical-correct/0"));
    EXPECT_NE(replication_seed(7, a, 0), replication_seed(7, a, 1));
    EXPECT_NE(replication_seed(7, a, 0), replication_seed(7, b, 0));
}

TEST(Grid, SetupHonoursTheChoice) {
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        const auto c = make_setup({DesirabilityPolicy::Aggressive, HumanChoice::Correct}, seed);
        EXPECT_EQ(c.human_choice, c.correct_button);
        EXPECT_EQ(c.policy, DesirabilityPolicy::Aggressive);
        const auto i = make_setup({DesirabilityPolicy::Ethical, HumanChoice::Incorrect}, seed);
        EXPECT_NE(i.human_choice, i.correct_button);
        EXPECT_EQ(make_setup({DesirabilityPolicy::Ethical, HumanChoice::Random}, seed).human_choice,
                  make_setup({DesirabilityPolicy::Ethical, HumanChoice::Random}, seed).human_choice);
    }
}

TEST(Grid, EthicalIncorrectRedirectsEveryTime) {
    ExperimentGrid g;
    g.policies = {DesirabilityPolicy::Ethical};
    g.human_choices = {HumanChoice::Incorrect};
    g.replications = 3;
    const auto rows = run_grid(g, ArenaSpec{}, SimConfig{});
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) EXPECT_EQ(r.row.human_score, 1);
}

TEST(Grid, AggressiveAlwaysCostsTheHuman) {
    ExperimentGrid g;
    g.policies = {DesirabilityPolicy::Aggressive};
    g.human_choices = {HumanChoice::Correct, HumanChoice::Incorrect};
    const auto rows = run_grid(g, ArenaSpec{}, SimConfig{});
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) EXPECT_EQ(r.row.human_score, -1);
}

TEST(Grid, RandomChoiceRerunsIdentically) {
    ExperimentGrid g;
    g.human_choices = {HumanChoice::Random};
    g.replications = 2;
    g.base_seed = 99;
    const auto a = run_grid(g, ArenaSpec{}, SimConfig{}, 1);
    const auto b = run_grid(g, ArenaSpec{}, SimConfig{}, 1);
    std::ostringstream sa, sb;
    std::vector<SummaryRow> ra, rb;
    for (const auto& r : a) ra.push_back(r.row);
    for (const auto& r : b) rb.push_back(r.row);
    write_summary_csv(sa, ra);
    write_summary_csv(sb, rb);
    EXPECT_EQ(sa.str(), sb.str());
}

TEST(Grid, OrderingIndependentOfWorkerCount) {
    ExperimentGrid g;
    g.replications = 2;
    g.base_seed = 3;
    const auto serial = run_grid(g, ArenaSpec{}, SimConfig{}, 1);
    const auto parallel = run_grid(g, ArenaSpec{}, SimConfig{}, 4);
    ASSERT_EQ(serial.size(), 12u);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].row.trial_id, parallel[i].row.trial_id);
        std::ostringstream a, b;
        write_trace_csv(a, serial[i].row.trial_id, serial[i].result.trace);
        write_trace_csv(b, parallel[i].row.trial_id, parallel[i].result.trace);
        EXPECT_EQ(a.str(), b.str());
    }
    EXPECT_EQ(serial.front().row.trial_id, "ethical-correct-r0");
    EXPECT_EQ(serial.back().row.trial_id, "aggressive-incorrect-r1");
}

TEST(Grid, InvalidGridIsRejected) {
    ExperimentGrid g;
    g.replications = 0;
    EXPECT_THROW(run_grid(g, ArenaSpec{}, SimConfig{}), ConfigError);
    g = {};
    g.policies.clear();
    EXPECT_THROW(run_grid(g, ArenaSpec{}, SimConfig{}), ConfigError);
}

TEST(Grid, ReplayedScoresMatchSummary) {
    ExperimentGrid g;
    g.replications = 2;
    g.human_choices = {HumanChoice::Correct, HumanChoice::Incorrect, HumanChoice::Random};
    for (const auto& rec : run_grid(g, ArenaSpec{}, SimConfig{})) {
        const RewardLedger replay = replay_scores(rec.result.trace, ArenaSpec{}, rec.setup);
        EXPECT_EQ(replay.human, rec.row.human_score) << rec.row.trial_id;
        EXPECT_EQ(replay.assistant, rec.row.assistant_score) << rec.row.trial_id;
        EXPECT_LE(std::abs(rec.row.human_score), 1);
        EXPECT_LE(std::abs(rec.row.assistant_score), 1);

        // Same again from the serialized trace.
        std::stringstream csv;
        write_trace_csv(csv, rec.row.trial_id, rec.result.trace);
        std::vector<TraceRecord> parsed;
        for (auto& row : read_trace_csv(csv)) parsed.push_back(row.record);
        EXPECT_EQ(replay_scores(parsed, ArenaSpec{}, rec.setup), replay);
    }
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

TEST(TraceCsv, EmptyTraceIsHeaderOnly) {
    std::ostringstream out;
    write_trace_csv(out, "x", std::vector<TraceRecord>{});
    EXPECT_EQ(out.str(), std::string(kTraceHeader) + "\n");
}

TEST(TraceCsv, SingleRecordLayout) {
    TraceRecord r;
    r.tick = 30;
    r.time = 1.0;
    r.human = {{-0.048447, -0.654158}, ButtonId::R, std::nullopt};
    r.assistant = {{0.0, 0.9}, std::nullopt, ButtonId::L};
    r.enforced = BehaviouralAlternative::PointL;
    r.q = {0.075858, 0.925261, 0.075858, 0.999447, -0.0000001};
    std::ostringstream out;
    write_trace_csv(out, "ethical-incorrect-r0", std::vector<TraceRecord>{r});
    EXPECT_EQ(out.str(), std::string(kTraceHeader) +
                             "\nethical-incorrect-r0,30,1.000000,-0.048447,-0.654158,R,0.000000,0.900000,,L,"
                             "Point(L),0.075858,0.925261,0.075858,0.999447,0.000000\n");
}

TEST(TraceCsv, FullTrialHasOneRowPerTick) {
    TrialSetup s{ButtonId::L, ButtonId::L, DesirabilityPolicy::Ethical, 0};
    const auto result = run_trial(ArenaSpec{}, s, SimConfig{});
    std::stringstream csv;
    write_trace_csv(csv, "t", result.trace);
    const auto rows = read_trace_csv(csv);
    ASSERT_EQ(rows.size(), result.trace.size());
    ASSERT_EQ(static_cast<std::int64_t>(rows.size()), rows.back().record.tick + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i % 30 == 0) continue;
        EXPECT_EQ(rows[i].record.q, rows[i - 1].record.q);
    }
}

TEST(TraceCsv, ParseSerializeIsByteIdentical) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<TraceRecord> trace;
        for (int i = 0; i < 50; ++i) {
            TraceRecord r;
            r.tick = i;
            r.time = i / 30.0;
            r.human.position = {u(rng), u(rng)};
            r.assistant.position = {u(rng), u(rng)};
            auto maybe = [&]() -> std::optional<ButtonId> {
                const int k = pick(rng);
                return k == 2 ? std::nullopt : std::optional(static_cast<ButtonId>(k));
            };
            r.human.goal = maybe();
            r.assistant.goal = maybe();
            r.assistant.pointing = maybe();
            if (pick(rng)) r.enforced = static_cast<BehaviouralAlternative>(i % 5);
            for (auto& q : r.q) q = u(rng) / 1.5;
            trace.push_back(r);
        }
        std::stringstream first;
        write_trace_csv(first, "rt-" + std::to_string(trial), trace);
        const std::string text = first.str();
        std::istringstream in(text);
        const auto rows = read_trace_csv(in);
        std::ostringstream second;
        write_trace_csv(second, rows);
        EXPECT_EQ(second.str(), text);
    }
}

TEST(TraceCsv, RejectsMalformedInput) {
    std::istringstream bad_header("tick,time\n");
    EXPECT_THROW(read_trace_csv(bad_header), CsvError);
    std::istringstream short_row(std::string(kTraceHeader) + "\nx,1,2\n");
    EXPECT_THROW(read_trace_csv(short_row), CsvError);
    std::istringstream bad_alt(std::string(kTraceHeader) +
                               "\nx,0,0.0,0,0,,0,0,,,Jump,0,0,0,0,0\n");
    EXPECT_THROW(read_trace_csv(bad_alt), CsvError);
}

TEST(TraceCsv, IoFailureNamesThePath) {
    const fs::path p = "/nonexistent-dir/trace.csv";
    try {
        write_trace_csv(p, "x", std::vector<TraceRecord>{});
        FAIL();
    } catch (const CsvError& e) {
        EXPECT_NE(std::string(e.what()).find(p.string()), std::string::npos);
    }
}

TEST(SummaryCsv, RoundTrip) {
    ExperimentGrid g;
    g.human_choices = {HumanChoice::Correct, HumanChoice::Random};
    std::vector<SummaryRow> rows;
    for (const auto& r : run_grid(g, ArenaSpec{}, SimConfig{})) rows.push_back(r.row);
    std::stringstream first;
    write_summary_csv(first, rows);
    const std::string text = first.str();
    std::istringstream in(text);
    const auto parsed = read_summary_csv(in);
    ASSERT_EQ(parsed.size(), rows.size());
    std::ostringstream second;
    write_summary_csv(second, parsed);
    EXPECT_EQ(second.str(), text);
    EXPECT_EQ(count(text, "\n"), rows.size() + 1);
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

std::vector<std::vector<TraceRecord>> cell_traces(DesirabilityPolicy p, HumanChoice c, int reps) {
    ExperimentGrid g;
    g.policies = {p};
    g.human_choices = {c};
    g.replications = reps;
    std::vector<std::vector<TraceRecord>> out;
    for (const auto& r : run_grid(g, ArenaSpec{}, SimConfig{})) out.push_back(r.result.trace);
    return out;
}

TEST(Svg, StationaryAssistantIsAPointMarker) {
    const auto traces = cell_traces(DesirabilityPolicy::Ethical, HumanChoice::Correct, 1);
    const std::string svg = render_svg(traces, ArenaSpec{}, "ethical-correct");
    EXPECT_EQ(count(svg, "<polyline class=\"trajectory human\""), 1u);
    EXPECT_EQ(count(svg, "<circle class=\"trajectory assistant\""), 1u);
    EXPECT_EQ(count(svg, "class=\"pointing-event\""), 0u);
}

TEST(Svg, ThreeReplicationsGiveThreePairs) {
    const auto traces = cell_traces(DesirabilityPolicy::Ethical, HumanChoice::Incorrect, 3);
    const std::string svg = render_svg(traces, ArenaSpec{}, "ethical-incorrect");
    EXPECT_EQ(count(svg, "class=\"trajectory human\""), 3u);
    EXPECT_EQ(count(svg, "class=\"trajectory assistant\""), 3u);
    EXPECT_EQ(count(svg, "class=\"start\""), 6u);
    EXPECT_EQ(count(svg, "class=\"pointing-event\""), 3u);
    EXPECT_EQ(count(svg, ">L</text>"), 1u);
    EXPECT_EQ(count(svg, ">R</text>"), 1u);
}

TEST(Svg, WellFormedXmlWithSingleRoot) {
    const auto traces = cell_traces(DesirabilityPolicy::Egoistic, HumanChoice::Incorrect, 2);
    std::istringstream in(render_svg(traces, ArenaSpec{}, "a <title> & more"));
    boost::property_tree::ptree tree;
    ASSERT_NO_THROW(boost::property_tree::read_xml(in, tree));
    std::size_t elements = 0;
    for (const auto& child : tree) {
        if (child.first != "<xmlcomment>") ++elements;
    }
    EXPECT_EQ(elements, 1u);
    EXPECT_EQ(tree.begin()->first, "svg");
    EXPECT_EQ(tree.get<std::string>("svg.title"), "a <title> & more");
}

}  // namespace
}  // namespace shellgame
