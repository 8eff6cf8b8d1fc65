#include "shellgame/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <string>

namespace shellgame {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config: invalid value '" + std::string(value) + "' for key '" +
                          std::string(key) + "'");
    }
    return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, std::string_view)>;

template <typename F>
Setter real_field(F accessor) {
    return [accessor](ExperimentConfig& c, std::string_view k, std::string_view v) {
        accessor(c) = parse_number<double>(k, v);
    };
}

template <typename F>
Setter int_field(F accessor) {
    return [accessor](ExperimentConfig& c, std::string_view k, std::string_view v) {
        accessor(c) = parse_number<int>(k, v);
    };
}

struct KeyTable {
    std::vector<std::string_view> order;
    std::map<std::string_view, Setter, std::less<>> setters;

    void add(std::string_view key, Setter s) {
        order.push_back(key);
        setters.emplace(key, std::move(s));
    }
};

const KeyTable& key_table() {
    static const KeyTable table = [] {
        KeyTable t;
        t.add("arena_width", real_field([](ExperimentConfig& c) -> double& { return c.arena.width; }));
        t.add("arena_height", real_field([](ExperimentConfig& c) -> double& { return c.arena.height; }));
        t.add("button_l_x", real_field([](ExperimentConfig& c) -> double& { return c.arena.buttons[0].x; }));
        t.add("button_l_y", real_field([](ExperimentConfig& c) -> double& { return c.arena.buttons[0].y; }));
        t.add("button_r_x", real_field([](ExperimentConfig& c) -> double& { return c.arena.buttons[1].x; }));
        t.add("button_r_y", real_field([](ExperimentConfig& c) -> double& { return c.arena.buttons[1].y; }));
        t.add("press_radius", real_field([](ExperimentConfig& c) -> double& { return c.arena.press_radius; }));
        t.add("human_start_x", real_field([](ExperimentConfig& c) -> double& { return c.arena.human_start.x; }));
        t.add("human_start_y", real_field([](ExperimentConfig& c) -> double& { return c.arena.human_start.y; }));
        t.add("assistant_start_x",
              real_field([](ExperimentConfig& c) -> double& { return c.arena.assistant_start.x; }));
        t.add("assistant_start_y",
              real_field([](ExperimentConfig& c) -> double& { return c.arena.assistant_start.y; }));
        t.add("physics_dt", real_field([](ExperimentConfig& c) -> double& { return c.sim.physics_dt; }));
        t.add("layer_period", int_field([](ExperimentConfig& c) -> int& { return c.sim.layer_period; }));
        t.add("agent_speed", real_field([](ExperimentConfig& c) -> double& { return c.sim.agent_speed; }));
        t.add("timeout", real_field([](ExperimentConfig& c) -> double& { return c.sim.timeout; }));
        t.add("avoidance_threshold",
              real_field([](ExperimentConfig& c) -> double& { return c.sim.avoidance_threshold; }));
        t.add("velocity_window", int_field([](ExperimentConfig& c) -> int& { return c.sim.velocity_window; }));
        t.add("beta", real_field([](ExperimentConfig& c) -> double& { return c.sim.sigmoid.beta; }));
        t.add("t", real_field([](ExperimentConfig& c) -> double& { return c.sim.sigmoid.t; }));
        t.add("spread_threshold",
              real_field([](ExperimentConfig& c) -> double& { return c.sim.enforcement.spread_threshold; }));
        t.add("prediction_horizon",
              int_field([](ExperimentConfig& c) -> int& { return c.sim.prediction_horizon; }));
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string_view>& config_keys() { return key_table().order; }

void apply_config_entry(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
    const auto& setters = key_table().setters;
    const auto it = setters.find(key);
    if (it == setters.end()) {
        throw ConfigError("config: unknown key '" + std::string(key) + "'");
    }
    it->second(cfg, key, value);
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        try {
            apply_config_entry(base, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    base.validate();
    return base;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    return parse_config(in, std::move(base));
}

}  // namespace shellgame
