#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <stdexcept>

#include "shellgame/config.hpp"
#include "shellgame/ethical_layer.hpp"
#include "shellgame/grid.hpp"
#include "shellgame/svg.hpp"
#include "shellgame/trace_csv.hpp"

namespace fs = std::filesystem;

namespace shellgame {

namespace {

const std::vector<std::string> kPolicyNames{"ethical", "egoistic", "competitive", "aggressive"};
const std::vector<std::string> kChoiceNames{"correct", "incorrect", "random"};

struct CommonOptions {
    std::vector<std::string> policies;
    std::vector<std::string> choices;
    int replications = 1;
    std::uint64_t seed = 0;
    std::string config;
    std::string out = "out";
    bool svg = false;
};

ExperimentConfig load(const std::string& path) {
    ExperimentConfig cfg;
    if (!path.empty()) cfg = load_config(path);
    cfg.validate();
    return cfg;
}

Vec2 parse_xy(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    auto to_double = [&](std::string_view s) {
        double v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw CLI::ValidationError(what, "expected 'x,y', got '" + text + "'");
        }
        return v;
    };
    if (comma == std::string::npos) {
        throw CLI::ValidationError(what, "expected 'x,y', got '" + text + "'");
    }
    const std::string_view view = text;
    return {to_double(view.substr(0, comma)), to_double(view.substr(comma + 1))};
}

void add_cell_options(CLI::App* cmd, CommonOptions& o, bool multi) {
    if (multi) {
        cmd->add_option("--policy", o.policies, "Policies to run (default: all)")
            ->check(CLI::IsMember(kPolicyNames));
        cmd->add_option("--human-choice", o.choices, "Human choices (default: correct incorrect)")
            ->check(CLI::IsMember(kChoiceNames));
    } else {
        cmd->add_option("--policy", o.policies, "ethical | egoistic (alias competitive) | aggressive")
            ->check(CLI::IsMember(kPolicyNames))
            ->expected(1);
        cmd->add_option("--human-choice", o.choices, "correct | incorrect | random")
            ->check(CLI::IsMember(kChoiceNames))
            ->expected(1);
    }
    cmd->add_option("--replications", o.replications, "Replications per cell")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Base seed");
    cmd->add_option("--config", o.config, "key = value configuration file")->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_flag("--svg", o.svg, "Render one SVG per experiment cell");
}

ExperimentGrid make_grid(const CommonOptions& o, bool single_cell) {
    ExperimentGrid grid;
    grid.replications = o.replications;
    grid.base_seed = o.seed;
    if (!o.policies.empty() || single_cell) {
        grid.policies.clear();
        for (const auto& p : o.policies) grid.policies.push_back(*parse_policy(p));
        if (grid.policies.empty()) grid.policies.push_back(DesirabilityPolicy::Ethical);
    }
    if (!o.choices.empty() || single_cell) {
        grid.human_choices.clear();
        for (const auto& c : o.choices) grid.human_choices.push_back(*parse_human_choice(c));
        if (grid.human_choices.empty()) grid.human_choices.push_back(HumanChoice::Correct);
    }
    return grid;
}

void print_row(std::ostream& out, const SummaryRow& r) {
    auto b = [](const std::optional<ButtonId>& x) { return x ? std::string(to_string(*x)) : "-"; };
    char line[256];
    std::snprintf(line, sizeof line, "%-26s correct=%s human=%s(%+d) assistant=%s(%+d) %.2fs",
                  r.trial_id.c_str(), std::string(to_string(r.correct_button)).c_str(),
                  b(r.human_button).c_str(), r.human_score, b(r.assistant_button).c_str(),
                  r.assistant_score, r.duration);
    out << line << '\n';
}

int run_experiments(const CommonOptions& o, bool single_cell, std::ostream& out) {
    const ExperimentConfig cfg = load(o.config);
    const ExperimentGrid grid = make_grid(o, single_cell);
    const auto records = run_grid(grid, cfg.arena, cfg.sim);

    const fs::path dir = o.out;
    fs::create_directories(dir / "traces");
    std::vector<SummaryRow> rows;
    for (const auto& rec : records) {
        write_trace_csv(dir / "traces" / (rec.row.trial_id + ".csv"), rec.row.trial_id, rec.result.trace);
        rows.push_back(rec.row);
        print_row(out, rec.row);
    }
    write_summary_csv(dir / "summary.csv", rows);

    if (o.svg) {
        for (const auto& cell : grid.cells()) {
            std::vector<std::vector<TraceRecord>> traces;
            for (const auto& rec : records) {
                if (rec.cell == cell) traces.push_back(rec.result.trace);
            }
            write_svg(dir / (cell.label() + ".svg"), traces, cfg.arena, cell.label());
        }
    }
    out << records.size() << " trial(s) written to " << dir.string() << '\n';
    return 0;
}

// Splits "ethical-incorrect-r2" into ("ethical-incorrect", 2).
std::optional<std::pair<std::string, int>> split_trial_id(const std::string& id) {
    const auto dash = id.rfind("-r");
    if (dash == std::string::npos) return std::nullopt;
    int rep = 0;
    const char* first = id.data() + dash + 2;
    const char* last = id.data() + id.size();
    const auto [ptr, ec] = std::from_chars(first, last, rep);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return std::pair{id.substr(0, dash), rep};
}

int plot(const std::string& config, const std::string& trace_dir_arg, const std::string& out_dir,
         std::ostream& out) {
    const ExperimentConfig cfg = load(config);
    const fs::path trace_dir =
        trace_dir_arg.empty() ? fs::path(out_dir) / "traces" : fs::path(trace_dir_arg);
    if (!fs::is_directory(trace_dir)) {
        throw std::runtime_error("trace directory not found: " + trace_dir.string());
    }
    std::map<std::string, std::map<int, std::vector<TraceRecord>>> cells;
    for (const auto& entry : fs::directory_iterator(trace_dir)) {
        if (entry.path().extension() != ".csv") continue;
        for (auto& row : read_trace_csv(entry.path())) {
            const auto key = split_trial_id(row.trial_id);
            if (!key) throw std::runtime_error("unrecognised trial id '" + row.trial_id + "'");
            cells[key->first][key->second].push_back(row.record);
        }
    }
    fs::create_directories(out_dir);
    for (const auto& [label, reps] : cells) {
        std::vector<std::vector<TraceRecord>> traces;
        for (const auto& [rep, trace] : reps) traces.push_back(trace);
        write_svg(fs::path(out_dir) / (label + ".svg"), traces, cfg.arena, label);
    }
    out << cells.size() << " SVG file(s) written to " << out_dir << '\n';
    return 0;
}

struct EvalOptions {
    std::string policy = "ethical";
    std::string config;
    std::string correct = "L";
    std::string human_pos;
    std::string human_vel = "0,0";
    std::string asst_pos;
};

int eval(const EvalOptions& o, std::ostream& out) {
    const ExperimentConfig cfg = load(o.config);
    TrialSetup setup;
    setup.policy = *parse_policy(o.policy);
    setup.correct_button = *parse_button(o.correct);
    setup.human_choice = setup.correct_button;

    WorldState w = initial_world(cfg.arena, setup, cfg.sim.agent_speed);
    if (!o.human_pos.empty()) w.human.position = parse_xy(o.human_pos, "--human-pos");
    if (!o.asst_pos.empty()) w.assistant.position = parse_xy(o.asst_pos, "--asst-pos");
    w.human.velocity_estimate = parse_xy(o.human_vel, "--human-vel");
    if (!cfg.arena.contains(w.human.position) || !cfg.arena.contains(w.assistant.position)) {
        throw ConfigError("snapshot positions must lie inside the arena");
    }

    const LayerDecision d = layer_tick(w, setup.policy, cfg.sim.layer_rules());
    const auto goal = infer_human_goal(w.human.position, w.human.velocity_estimate, cfg.arena);
    out << "policy=" << to_string(setup.policy) << " correct=" << to_string(setup.correct_button)
        << " inferred_goal=" << (goal ? to_string(*goal) : "none") << '\n';
    out << "alternative  human_final          assistant_final      q_h       q_e       q_n\n";
    for (const auto& e : d.evaluation) {
        char line[256];
        std::snprintf(line, sizeof line, "%-12s (%+.4f,%+.4f)  (%+.4f,%+.4f)  %.6f  %.6f  %+.6f",
                      std::string(to_string(e.alternative)).c_str(), e.outcome.human_final.x,
                      e.outcome.human_final.y, e.outcome.assistant_final.x, e.outcome.assistant_final.y,
                      e.q_h, e.q_e, e.q_n);
        out << line << '\n';
    }
    out << "enforced=" << (d.enforced ? to_string(*d.enforced) : "none") << '\n';
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shell-game simulator with a generate-and-test ethical layer", "shellgame"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Run one experiment cell");
    add_cell_options(run_cmd, run_opts, false);

    CommonOptions grid_opts;
    auto* grid_cmd = app.add_subcommand("grid", "Run the policy x human-choice experiment grid");
    add_cell_options(grid_cmd, grid_opts, true);

    std::string plot_config, plot_traces, plot_out = "out";
    auto* plot_cmd = app.add_subcommand("plot", "Render SVGs from stored trace CSVs");
    plot_cmd->add_option("traces", plot_traces, "Trace directory (default: <out>/traces)");
    plot_cmd->add_option("--config", plot_config, "key = value configuration file")->check(CLI::ExistingFile);
    plot_cmd->add_option("--out", plot_out, "Output directory");

    EvalOptions eval_opts;
    auto* eval_cmd = app.add_subcommand("eval", "Print the five q_n values for a frozen snapshot");
    eval_cmd->add_option("--policy", eval_opts.policy, "ethical | egoistic | aggressive")
        ->check(CLI::IsMember(kPolicyNames));
    eval_cmd->add_option("--config", eval_opts.config, "key = value configuration file")
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--correct", eval_opts.correct, "Correct button")->check(CLI::IsMember({"L", "R"}));
    eval_cmd->add_option("--human-pos", eval_opts.human_pos, "Human position x,y (default: start)");
    eval_cmd->add_option("--human-vel", eval_opts.human_vel, "Human velocity estimate vx,vy");
    eval_cmd->add_option("--asst-pos", eval_opts.asst_pos, "Assistant position x,y (default: start)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "shellgame: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*run_cmd) return run_experiments(run_opts, true, out);
        if (*grid_cmd) return run_experiments(grid_opts, false, out);
        if (*plot_cmd) return plot(plot_config, plot_traces, plot_out, out);
        if (*eval_cmd) return eval(eval_opts, out);
    } catch (const CLI::ValidationError& e) {
        err << "shellgame: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "shellgame: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace shellgame
